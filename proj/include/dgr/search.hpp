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

#ifndef DGR_SEARCH_HPP_
#define DGR_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dgr/ruler.hpp"

namespace dgr {

struct SearchConfig {
  std::optional<std::uint64_t> node_budget;
  std::optional<double> time_budget_s;
  int thread_count = 1;          // 1 = pure serial reference path
  bool symmetry_breaking = true; // ruler minima strictly increasing
};

enum class SearchStatus {
  kFound,
  kExhausted,       // complete refutation
  kBudgetExceeded,  // no claim
};

const char* to_string(SearchStatus status);

struct SearchStats {
  std::uint64_t nodes = 0;
  int max_depth = 0;  // deepest number of placed marks
  double elapsed_s = 0.0;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::kExhausted;
  std::optional<DgrSystem> witness;  // present iff status == kFound
  SearchStats stats;
};

// Decides whether an (I,J,n)-DGR exists by pruned backtracking over
// positions 1..n.  With thread_count > 1 the tree is split at a fixed
// depth into prefixes handed to OpenMP workers; status is identical to
// the serial run, the witness may differ.
SearchOutcome exists_dgr(int i_count, int j_marks, int n_span,
                         const SearchConfig& cfg = {});

// Same kernel over an arbitrary ascending universe of positive
// integers; the witness, when found, is returned as bare rulers.
struct UniverseOutcome {
  SearchStatus status = SearchStatus::kExhausted;
  std::optional<std::vector<Ruler>> rulers;
  SearchStats stats;
};
UniverseOutcome find_in_universe(std::span<const int> universe, int i_count,
                                 int j_marks, const SearchConfig& cfg = {});

struct MinResult {
  SearchStatus status = SearchStatus::kExhausted;  // kFound when computed
  int value = 0;                                   // H(I,J) when kFound
  std::optional<DgrSystem> witness;
  SearchStats stats;
};

// H(I,J) by scanning n upward from IJ; the returned witness uses
// mark n (asserted, since n-1 was refuted).
MinResult min_n(int i_count, int j_marks, const SearchConfig& cfg = {});

// Y(I,J) falsifier: looks for a size-n subset of [1, universe_max]
// containing no I disjoint J-mark Golomb rulers.  A hit proves
// Y(I,J) > n; exhausting the bounded universe proves nothing about Y.
struct CounterexampleResult {
  SearchStatus status = SearchStatus::kExhausted;  // kFound = refuter found
  std::optional<std::vector<int>> witness_set;
  SearchStats stats;
};
CounterexampleResult counterexample_search(int i_count, int j_marks,
                                           int subset_size, int universe_max,
                                           const SearchConfig& cfg = {});

}  // namespace dgr

#endif  // DGR_SEARCH_HPP_
