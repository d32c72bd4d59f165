// Copyright 2026 The DGR Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dgr/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstring>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dgr {

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kFound:
      return "found";
    case SearchStatus::kExhausted:
      return "exhausted";
    case SearchStatus::kBudgetExceeded:
      return "budget-exceeded";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

// Differences are bounded by the largest universe value.
constexpr int kDiffWords = 8;
constexpr int kMaxUniverseValue = kDiffWords * 64 - 1;

struct DiffSet {
  std::array<std::uint64_t, kDiffWords> words{};

  bool test(int d) const { return (words[d >> 6] >> (d & 63)) & 1; }
  void set(int d) { words[d >> 6] |= std::uint64_t{1} << (d & 63); }
  void clear(int d) { words[d >> 6] &= ~(std::uint64_t{1} << (d & 63)); }
};

// One backtracking engine instance.  Values are assigned in ascending
// universe order to one of the I rulers or left unused.  Per-ruler
// difference bitsets make each placement check O(J).
class Kernel {
 public:
  Kernel(const std::vector<int>& universe, int i_count, int j_marks, bool sym)
      : universe_(universe),
        i_count_(i_count),
        j_marks_(j_marks),
        sym_(sym),
        marks_(i_count),
        diffs_(i_count),
        unfilled_(i_count * j_marks) {}

  // Budget plumbing.  In parallel runs the node pool and stop flag are
  // shared across workers.
  std::uint64_t node_budget = UINT64_MAX;
  bool timed = false;
  Clock::time_point deadline{};
  std::atomic<bool>* stop = nullptr;
  std::atomic<std::uint64_t>* shared_nodes = nullptr;

  // Prefix enumeration: when cutoff >= 0, recursion stops at that
  // position and records the choice vector instead of descending.
  int cutoff = -1;
  std::vector<std::vector<signed char>>* prefix_out = nullptr;

  std::uint64_t nodes = 0;
  int max_depth = 0;
  bool budget_hit = false;
  std::vector<std::vector<int>> found_rulers;

  bool run() { return search(0); }

  // Rebuilds the state a recorded prefix left behind, then resumes.
  bool resume(const std::vector<signed char>& prefix) {
    for (std::size_t idx = 0; idx < prefix.size(); ++idx) {
      int r = prefix[idx];
      if (r < 0) continue;
      place(r, universe_[idx]);
    }
    return search(static_cast<int>(prefix.size()));
  }

  void flush_nodes() {
    if (shared_nodes && pending_) {
      shared_nodes->fetch_add(pending_, std::memory_order_relaxed);
      pending_ = 0;
    }
  }

 private:
  void place(int r, int v) {
    for (int m : marks_[r]) diffs_[r].set(v - m);
    marks_[r].push_back(v);
    --unfilled_;
    ++placed_;
    max_depth = std::max(max_depth, placed_);
  }

  void unplace(int r, int v) {
    marks_[r].pop_back();
    for (int m : marks_[r]) diffs_[r].clear(v - m);
    ++unfilled_;
    --placed_;
  }

  bool over_budget() {
    ++nodes;
    ++pending_;
    if (shared_nodes) {
      if (pending_ >= 1024) flush_nodes();
      if (node_budget != UINT64_MAX &&
          shared_nodes->load(std::memory_order_relaxed) + pending_ >
              node_budget) {
        return true;
      }
    } else if (nodes > node_budget) {
      return true;
    }
    if (timed && (nodes & 2047) == 0 && Clock::now() > deadline) return true;
    return false;
  }

  bool search(int idx) {
    if (unfilled_ == 0) {
      found_rulers = marks_;
      return true;
    }
    if (stop && stop->load(std::memory_order_relaxed)) return false;
    if (over_budget()) {
      budget_hit = true;
      return false;
    }
    // Capacity prune: not enough positions left for the open slots.
    if (static_cast<int>(universe_.size()) - idx < unfilled_) return false;
    if (cutoff >= 0 && idx == cutoff) {
      prefix_out->push_back(choices_);
      return false;
    }
    const int v = universe_[idx];
    bool tried_empty = false;
    for (int r = 0; r < i_count_; ++r) {
      if (static_cast<int>(marks_[r].size()) == j_marks_) continue;
      if (marks_[r].empty()) {
        // With symmetry breaking, rulers open in index order, which
        // forces strictly increasing minima.  Without it every empty
        // ruler is tried.
        if (sym_ && tried_empty) continue;
        tried_empty = true;
      }
      bool feasible = true;
      for (int m : marks_[r]) {
        if (diffs_[r].test(v - m)) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      place(r, v);
      if (cutoff >= 0) choices_.push_back(static_cast<signed char>(r));
      bool found = search(idx + 1);
      if (cutoff >= 0) choices_.pop_back();
      unplace(r, v);
      if (found) return true;
      if (budget_hit) return false;
    }
    if (cutoff >= 0) choices_.push_back(-1);
    bool found = search(idx + 1);
    if (cutoff >= 0) choices_.pop_back();
    return found;
  }

  const std::vector<int>& universe_;
  int i_count_;
  int j_marks_;
  bool sym_;
  std::vector<std::vector<int>> marks_;
  std::vector<DiffSet> diffs_;
  int unfilled_;
  int placed_ = 0;
  std::uint64_t pending_ = 0;
  std::vector<signed char> choices_;
};

void apply_budgets(Kernel& k, const SearchConfig& cfg,
                   Clock::time_point start) {
  if (cfg.node_budget) k.node_budget = *cfg.node_budget;
  if (cfg.time_budget_s) {
    k.timed = true;
    k.deadline = start + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(*cfg.time_budget_s));
  }
}

UniverseOutcome run_serial(const std::vector<int>& universe, int i_count,
                           int j_marks, const SearchConfig& cfg,
                           Clock::time_point start) {
  Kernel kernel(universe, i_count, j_marks, cfg.symmetry_breaking);
  apply_budgets(kernel, cfg, start);
  bool found = kernel.run();
  UniverseOutcome out;
  out.stats.nodes = kernel.nodes;
  out.stats.max_depth = kernel.max_depth;
  if (found) {
    out.status = SearchStatus::kFound;
    std::vector<Ruler> rulers;
    for (auto& m : kernel.found_rulers) rulers.push_back(Ruler(m));
    out.rulers = std::move(rulers);
  } else {
    out.status = kernel.budget_hit ? SearchStatus::kBudgetExceeded
                                   : SearchStatus::kExhausted;
  }
  return out;
}

UniverseOutcome run_parallel(const std::vector<int>& universe, int i_count,
                             int j_marks, const SearchConfig& cfg,
                             Clock::time_point start) {
  // Split the tree at a fixed depth into independent prefixes.
  const int positions = static_cast<int>(universe.size());
  const std::size_t target =
      std::max<std::size_t>(64, 16 * static_cast<std::size_t>(
                                         cfg.thread_count));
  std::vector<std::vector<signed char>> prefixes;
  int depth = std::min(positions, 4);
  for (;;) {
    prefixes.clear();
    Kernel enumerator(universe, i_count, j_marks, cfg.symmetry_breaking);
    apply_budgets(enumerator, cfg, start);
    enumerator.cutoff = depth;
    enumerator.prefix_out = &prefixes;
    if (enumerator.run()) {
      // The whole search finished before reaching the split depth.
      UniverseOutcome out;
      out.status = SearchStatus::kFound;
      out.stats.nodes = enumerator.nodes;
      out.stats.max_depth = enumerator.max_depth;
      std::vector<Ruler> rulers;
      for (auto& m : enumerator.found_rulers) rulers.push_back(Ruler(m));
      out.rulers = std::move(rulers);
      return out;
    }
    if (enumerator.budget_hit) {
      UniverseOutcome out;
      out.status = SearchStatus::kBudgetExceeded;
      out.stats.nodes = enumerator.nodes;
      out.stats.max_depth = enumerator.max_depth;
      return out;
    }
    if (prefixes.empty()) {
      UniverseOutcome out;
      out.status = SearchStatus::kExhausted;
      out.stats.nodes = enumerator.nodes;
      out.stats.max_depth = enumerator.max_depth;
      return out;
    }
    if (prefixes.size() >= target || depth >= positions ||
        prefixes.size() > 200000) {
      break;
    }
    depth = std::min(positions, depth + 2);
  }

  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> node_pool{0};
  std::atomic<bool> budget_hit{false};
  std::vector<std::vector<int>> witness;
  std::uint64_t max_depth_agg = 0;

#ifdef _OPENMP
  omp_set_num_threads(cfg.thread_count);
#endif
#pragma omp parallel for schedule(dynamic) reduction(max : max_depth_agg)
  for (long p = 0; p < static_cast<long>(prefixes.size()); ++p) {
    if (stop.load(std::memory_order_relaxed)) continue;
    Kernel worker(universe, i_count, j_marks, cfg.symmetry_breaking);
    apply_budgets(worker, cfg, start);
    worker.stop = &stop;
    worker.shared_nodes = &node_pool;
    bool found = worker.resume(prefixes[p]);
    worker.flush_nodes();
    max_depth_agg = std::max<std::uint64_t>(max_depth_agg, worker.max_depth);
    if (worker.budget_hit) budget_hit.store(true, std::memory_order_relaxed);
    if (found) {
#pragma omp critical(dgr_search_witness)
      {
        if (!stop.load()) {
          witness = worker.found_rulers;
          stop.store(true);
        }
      }
    }
  }

  UniverseOutcome out;
  out.stats.nodes = node_pool.load();
  out.stats.max_depth = static_cast<int>(max_depth_agg);
  if (!witness.empty()) {
    out.status = SearchStatus::kFound;
    std::vector<Ruler> rulers;
    for (auto& m : witness) rulers.push_back(Ruler(m));
    out.rulers = std::move(rulers);
  } else {
    out.status = budget_hit.load() ? SearchStatus::kBudgetExceeded
                                   : SearchStatus::kExhausted;
  }
  return out;
}

UniverseOutcome run(const std::vector<int>& universe, int i_count, int j_marks,
                    const SearchConfig& cfg) {
  if (i_count < 1 || j_marks < 1) {
    throw DgrError("search requires I >= 1 and J >= 1");
  }
  if (!universe.empty() && universe.back() > kMaxUniverseValue) {
    throw DgrError("universe values above " +
                   std::to_string(kMaxUniverseValue) + " are unsupported");
  }
  Clock::time_point start = Clock::now();
  UniverseOutcome out;
  if (static_cast<long>(i_count) * j_marks >
      static_cast<long>(universe.size())) {
    out.status = SearchStatus::kExhausted;  // not enough positions at all
  } else if (cfg.thread_count <= 1) {
    out = run_serial(universe, i_count, j_marks, cfg, start);
  } else {
    out = run_parallel(universe, i_count, j_marks, cfg, start);
  }
  out.stats.elapsed_s =
      std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

}  // namespace

UniverseOutcome find_in_universe(std::span<const int> universe, int i_count,
                                 int j_marks, const SearchConfig& cfg) {
  std::vector<int> values(universe.begin(), universe.end());
  std::sort(values.begin(), values.end());
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] == values[i - 1]) {
      throw DgrError("universe contains duplicates");
    }
  }
  if (!values.empty() && values.front() < 1) {
    throw DgrError("universe values must be positive");
  }
  return run(values, i_count, j_marks, cfg);
}

SearchOutcome exists_dgr(int i_count, int j_marks, int n_span,
                         const SearchConfig& cfg) {
  std::vector<int> universe(n_span > 0 ? n_span : 0);
  std::iota(universe.begin(), universe.end(), 1);
  UniverseOutcome inner = run(universe, i_count, j_marks, cfg);
  SearchOutcome out;
  out.status = inner.status;
  out.stats = inner.stats;
  if (inner.rulers) {
    DgrSystem witness(i_count, j_marks, n_span, std::move(*inner.rulers));
    if (!verify_dgr(witness).valid) {
      throw DgrError("search produced an invalid witness (bug)");
    }
    out.witness = std::move(witness);
  }
  return out;
}

MinResult min_n(int i_count, int j_marks, const SearchConfig& cfg) {
  MinResult result;
  std::uint64_t nodes = 0;
  int max_depth = 0;
  double elapsed = 0;
  for (int n = i_count * j_marks;; ++n) {
    SearchConfig step = cfg;
    if (cfg.node_budget) {
      if (nodes >= *cfg.node_budget) {
        result.status = SearchStatus::kBudgetExceeded;
        break;
      }
      step.node_budget = *cfg.node_budget - nodes;
    }
    if (cfg.time_budget_s) {
      if (elapsed >= *cfg.time_budget_s) {
        result.status = SearchStatus::kBudgetExceeded;
        break;
      }
      step.time_budget_s = *cfg.time_budget_s - elapsed;
    }
    SearchOutcome outcome = exists_dgr(i_count, j_marks, n, step);
    nodes += outcome.stats.nodes;
    elapsed += outcome.stats.elapsed_s;
    max_depth = std::max(max_depth, outcome.stats.max_depth);
    if (outcome.status == SearchStatus::kBudgetExceeded) {
      result.status = SearchStatus::kBudgetExceeded;
      break;
    }
    if (outcome.status == SearchStatus::kFound) {
      // Minimality: n-1 was refuted, so the witness must use mark n.
      std::vector<int> marks = outcome.witness->union_marks();
      if (marks.back() != n) {
        throw DgrError("min_n witness does not use mark n (bug)");
      }
      result.status = SearchStatus::kFound;
      result.value = n;
      result.witness = std::move(outcome.witness);
      break;
    }
  }
  result.stats.nodes = nodes;
  result.stats.max_depth = max_depth;
  result.stats.elapsed_s = elapsed;
  return result;
}

CounterexampleResult counterexample_search(int i_count, int j_marks,
                                           int subset_size, int universe_max,
                                           const SearchConfig& cfg) {
  if (subset_size < 1 || universe_max < subset_size) {
    throw DgrError("counterexample_search needs universe_max >= subset size");
  }
  CounterexampleResult result;
  std::uint64_t nodes = 0;
  double elapsed = 0;

  std::vector<int> subset(subset_size);
  std::iota(subset.begin(), subset.end(), 1);
  for (;;) {
    SearchConfig step = cfg;
    step.thread_count = 1;
    step.symmetry_breaking = true;
    if (cfg.node_budget) {
      if (nodes >= *cfg.node_budget) {
        result.status = SearchStatus::kBudgetExceeded;
        break;
      }
      step.node_budget = *cfg.node_budget - nodes;
    }
    if (cfg.time_budget_s) {
      if (elapsed >= *cfg.time_budget_s) {
        result.status = SearchStatus::kBudgetExceeded;
        break;
      }
      step.time_budget_s = *cfg.time_budget_s - elapsed;
    }
    UniverseOutcome inner = find_in_universe(subset, i_count, j_marks, step);
    nodes += inner.stats.nodes;
    elapsed += inner.stats.elapsed_s;
    if (inner.status == SearchStatus::kBudgetExceeded) {
      result.status = SearchStatus::kBudgetExceeded;
      break;
    }
    if (inner.status == SearchStatus::kExhausted) {
      result.status = SearchStatus::kFound;
      result.witness_set = subset;
      break;
    }
    // Next size-subset_size combination of [1, universe_max].
    int i = subset_size - 1;
    while (i >= 0 && subset[i] == universe_max - (subset_size - 1 - i)) --i;
    if (i < 0) {
      result.status = SearchStatus::kExhausted;  // none found
      break;
    }
    ++subset[i];
    for (int j = i + 1; j < subset_size; ++j) subset[j] = subset[j - 1] + 1;
  }
  result.stats.nodes = nodes;
  result.stats.elapsed_s = elapsed;
  return result;
}

}  // namespace dgr
