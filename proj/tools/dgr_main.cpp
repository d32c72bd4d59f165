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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dgr/bounds.hpp"
#include "dgr/constructions.hpp"
#include "dgr/gf.hpp"
#include "dgr/io.hpp"
#include "dgr/ruler.hpp"
#include "dgr/search.hpp"

namespace {

// Exit codes: 0 success/found/valid, 1 negative result, 2 usage or
// parse error, 3 budget exceeded.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

bool g_quiet = false;

void say(const std::string& line) {
  if (!g_quiet) std::cout << line << '\n';
}

int default_threads() {
  if (const char* env = std::getenv("DGR_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw dgr::DgrError("cannot write " + path);
  out << j.dump(2) << '\n';
}

nlohmann::json stats_json(const dgr::SearchStats& stats,
                          dgr::SearchStatus status) {
  return {{"format_version", 1},
          {"status", dgr::to_string(status)},
          {"nodes", stats.nodes},
          {"max_depth", stats.max_depth},
          {"elapsed_s", stats.elapsed_s}};
}

int status_code(dgr::SearchStatus status, bool found_is_ok) {
  switch (status) {
    case dgr::SearchStatus::kFound:
      return found_is_ok ? kOk : kNegative;
    case dgr::SearchStatus::kExhausted:
      return found_is_ok ? kNegative : kOk;
    case dgr::SearchStatus::kBudgetExceeded:
      return kBudget;
  }
  return kUsage;
}

int run_verify(const std::string& path) {
  dgr::DgrSystem s = dgr::parse_dgr_file(path);
  dgr::ValidationReport report = dgr::verify_dgr(s);
  if (report.valid) {
    say("valid (" + std::to_string(s.i_count()) + "," +
        std::to_string(s.j_marks()) + "," + std::to_string(s.n_span()) + ")");
    return kOk;
  }
  for (const dgr::Violation& v : report.violations) say(v.describe());
  return kNegative;
}

struct SearchArgs {
  int i = 0, j = 0;
  std::optional<int> n;
  bool min = false;
  int threads = default_threads();
  std::optional<std::uint64_t> node_budget;
  std::optional<double> time_budget;
  std::string witness_out, stats_out;
};

int run_search(const SearchArgs& a) {
  dgr::SearchConfig cfg;
  cfg.thread_count = a.threads;
  cfg.node_budget = a.node_budget;
  cfg.time_budget_s = a.time_budget;

  dgr::SearchStatus status;
  dgr::SearchStats stats;
  std::optional<dgr::DgrSystem> witness;
  if (a.min) {
    dgr::MinResult r = dgr::min_n(a.i, a.j, cfg);
    status = r.status;
    stats = r.stats;
    witness = std::move(r.witness);
    if (status == dgr::SearchStatus::kFound) say(std::to_string(r.value));
  } else {
    dgr::SearchOutcome r = dgr::exists_dgr(a.i, a.j, *a.n, cfg);
    status = r.status;
    stats = r.stats;
    witness = std::move(r.witness);
    say(dgr::to_string(status));
  }
  if (witness) {
    if (!a.witness_out.empty()) dgr::write_dgr_file(a.witness_out, *witness);
    if (!g_quiet) std::cout << dgr::emit_dgr(*witness);
  }
  if (!a.stats_out.empty()) write_json(a.stats_out, stats_json(stats, status));
  return status_code(status, /*found_is_ok=*/true);
}

struct ConstructArgs {
  std::string rule;
  std::vector<std::string> inputs;
  std::optional<int> gap_t, gap_w;
  std::string out, trace_out;
};

int run_construct(const ConstructArgs& a) {
  auto input = [&](std::size_t idx) {
    if (idx >= a.inputs.size()) {
      throw dgr::DgrError("rule '" + a.rule + "' needs " +
                          std::to_string(idx + 1) + " input file(s)");
    }
    return dgr::parse_dgr_file(a.inputs[idx]);
  };
  auto gap = [&]() {
    if (!a.gap_t || !a.gap_w) {
      throw dgr::DgrError("rule '" + a.rule + "' needs --gap-t and --gap-w");
    }
    return dgr::Gap{*a.gap_t, *a.gap_w};
  };

  dgr::Constructed c{dgr::DgrSystem(0, 0, 0, {}), {}};
  if (a.rule == "concat") {
    c = dgr::concat_compose(input(0), input(1));
  } else if (a.rule == "extend") {
    c = dgr::thm3_extend(input(0), input(1));
  } else if (a.rule == "double") {
    c = dgr::thm3_double(input(0));
  } else if (a.rule == "gap-merge") {
    c = dgr::gap_merge(input(0), gap(), input(1));
  } else if (a.rule == "gap-double") {
    c = dgr::gap_double(input(0), gap());
  } else if (a.rule == "shift-pair") {
    dgr::DgrSystem s = input(0);
    if (s.i_count() != 1) {
      throw dgr::DgrError("shift-pair input must be a single-ruler system");
    }
    c = dgr::shift_pair(s.rulers()[0], s.n_span());
  } else {
    std::cerr << "unknown rule '" << a.rule << "'\n";
    return kUsage;
  }

  if (!a.out.empty()) dgr::write_dgr_file(a.out, c.system);
  if (!a.trace_out.empty()) write_json(a.trace_out, c.trace.to_json());
  if (!g_quiet) std::cout << dgr::emit_dgr(c.system);
  return kOk;
}

int run_singer(int q, const std::string& out) {
  dgr::SingerSet set = dgr::singer_difference_set(q);
  auto [ruler, modulus] = dgr::singer_ruler(q);
  std::string residues;
  for (std::size_t k = 0; k < set.residues.size(); ++k) {
    if (k) residues += ' ';
    residues += std::to_string(set.residues[k]);
  }
  say("difference set: " + residues);
  say("modulus: " + std::to_string(modulus));
  say("ruler: " + dgr::emit_ruler(ruler));
  if (!out.empty()) {
    std::ofstream file(out);
    if (!file) throw dgr::DgrError("cannot write " + out);
    file << dgr::emit_ruler(ruler) << '\n';
  }
  return kOk;
}

struct BoundsArgs {
  int max_i = 0, max_j = 0;
  std::string seed_from = "search";
  int seed_max_i = 3, seed_max_j = 5;
  std::string out;
  bool materialize = false;
  std::optional<double> time_budget;
};

int run_bounds(const BoundsArgs& a) {
  dgr::BoundTable table(a.max_i, a.max_j);
  if (a.seed_from == "search") {
    dgr::SearchConfig cfg;
    cfg.time_budget_s = a.time_budget;
    for (int i = 1; i <= std::min(a.max_i, a.seed_max_i); ++i) {
      for (int j = 1; j <= std::min(a.max_j, a.seed_max_j); ++j) {
        dgr::MinResult r = dgr::min_n(i, j, cfg);
        if (r.status != dgr::SearchStatus::kFound) {
          say("seed search for H(" + std::to_string(i) + "," +
              std::to_string(j) + ") " + dgr::to_string(r.status));
          return kBudget;
        }
        table.seed_exact(i, j, r.value, *r.witness);
      }
    }
  } else {
    dgr::BoundTable seeds = dgr::BoundTable::load(a.seed_from);
    for (int i = 1; i <= std::min(a.max_i, seeds.max_i()); ++i) {
      for (int j = 1; j <= std::min(a.max_j, seeds.max_j()); ++j) {
        const dgr::BoundCell& c = seeds.cell(i, j);
        if (c.exact() && c.witness) {
          table.seed_exact(i, j, c.h_lower, *c.witness);
        }
      }
    }
  }
  table.seed_theorem8();
  table.propagate();
  if (a.materialize) {
    for (int i = 1; i <= a.max_i; ++i) {
      for (int j = 1; j <= a.max_j; ++j) {
        try {
          table.materialize_witness(i, j);
        } catch (const dgr::DgrError&) {
          // non-constructive or unbounded chain; bounds stand as-is
        }
      }
    }
  }
  if (!a.out.empty()) table.save(a.out);
  for (int i = 1; i <= a.max_i; ++i) {
    for (int j = 1; j <= a.max_j; ++j) {
      const dgr::BoundCell& c = table.cell(i, j);
      std::string upper = c.h_upper == dgr::kNoBound
                              ? std::string("inf")
                              : std::to_string(c.h_upper);
      say("H(" + std::to_string(i) + "," + std::to_string(j) + ") in [" +
          std::to_string(c.h_lower) + ", " + upper + "]" +
          (c.exact() ? " exact" : ""));
    }
  }
  return kOk;
}

struct CheckArgs {
  int conjecture = 0;
  int i = 4;
  std::string table;
  int threads = default_threads();
  std::optional<std::uint64_t> node_budget;
  std::optional<double> time_budget;
  std::string report_out;
};

int run_check(const CheckArgs& a) {
  if (a.conjecture == 5) {
    dgr::SearchConfig cfg;
    cfg.thread_count = a.threads;
    cfg.node_budget = a.node_budget;
    cfg.time_budget_s = a.time_budget;
    dgr::Conjecture5Report report = dgr::check_conjecture5(a.i, cfg);
    say("conjecture 5, I=" + std::to_string(a.i) + ": " +
        dgr::to_string(report.status));
    if (report.witness && !g_quiet) std::cout << dgr::emit_dgr(*report.witness);
    if (!a.report_out.empty()) write_json(a.report_out, report.to_json());
    return status_code(report.status, /*found_is_ok=*/true);
  }

  if (a.table.empty()) {
    std::cerr << "conjecture " << a.conjecture << " needs --table\n";
    return kUsage;
  }
  dgr::BoundTable table = dgr::BoundTable::load(a.table);
  if (a.conjecture == 2) {
    dgr::Conjecture2Report report = table.check_conjecture2();
    say("conjecture 2: " + std::to_string(report.entries.size()) +
        " exact adjacent pairs, " + std::to_string(report.violations) +
        " violations");
    if (!a.report_out.empty()) write_json(a.report_out, report.to_json());
    return report.violations == 0 ? kOk : kNegative;
  }
  if (a.conjecture == 6) {
    dgr::Conjecture6Report report = table.check_conjecture6();
    say("conjecture 6: " + std::to_string(report.entries.size()) +
        " evaluable k, " + std::to_string(report.violations) + " violations");
    if (!a.report_out.empty()) write_json(a.report_out, report.to_json());
    return report.violations == 0 ? kOk : kNegative;
  }
  std::cerr << "unknown conjecture " << a.conjecture << '\n';
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disjoint Golomb Ruler toolkit"};
  app.require_subcommand(1);
  app.add_flag("--quiet", g_quiet, "suppress human-readable output");

  std::string verify_path;
  CLI::App* verify = app.add_subcommand("verify", "validate a DGR file");
  verify->add_option("file", verify_path)->required();

  SearchArgs sa;
  CLI::App* search = app.add_subcommand("search", "backtracking search");
  search->add_option("--i", sa.i)->required();
  search->add_option("--j", sa.j)->required();
  search->add_option("--n", sa.n);
  search->add_flag("--min", sa.min, "compute the least admitting n");
  search->add_option("--threads", sa.threads);
  search->add_option("--node-budget", sa.node_budget);
  search->add_option("--time-budget", sa.time_budget);
  search->add_option("--witness-out", sa.witness_out);
  search->add_option("--stats-out", sa.stats_out);

  ConstructArgs ca;
  CLI::App* construct = app.add_subcommand("construct", "apply a theorem");
  construct->add_option("--rule", ca.rule)->required();
  construct->add_option("--in", ca.inputs);
  construct->add_option("--gap-t", ca.gap_t);
  construct->add_option("--gap-w", ca.gap_w);
  construct->add_option("--out", ca.out);
  construct->add_option("--trace-out", ca.trace_out);

  int singer_q = 0;
  std::string singer_out;
  CLI::App* singer = app.add_subcommand("singer", "Singer difference set");
  singer->add_option("--q", singer_q)->required();
  singer->add_option("--out", singer_out);

  BoundsArgs ba;
  CLI::App* bounds = app.add_subcommand("bounds", "build a bounds table");
  bounds->add_option("--max-i", ba.max_i)->required();
  bounds->add_option("--max-j", ba.max_j)->required();
  bounds->add_option("--seed-from", ba.seed_from,
                     "'search' or a saved table path");
  bounds->add_option("--seed-max-i", ba.seed_max_i);
  bounds->add_option("--seed-max-j", ba.seed_max_j);
  bounds->add_option("--out", ba.out);
  bounds->add_flag("--materialize", ba.materialize);
  bounds->add_option("--time-budget", ba.time_budget);

  CheckArgs ka;
  CLI::App* check = app.add_subcommand("check", "conjecture checkers");
  check->add_option("--conjecture", ka.conjecture)->required();
  check->add_option("--i", ka.i);
  check->add_option("--table", ka.table);
  check->add_option("--threads", ka.threads);
  check->add_option("--node-budget", ka.node_budget);
  check->add_option("--time-budget", ka.time_budget);
  check->add_option("--report-out", ka.report_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (verify->parsed()) return run_verify(verify_path);
    if (search->parsed()) {
      if (sa.min == sa.n.has_value()) {
        std::cerr << "search needs exactly one of --n and --min\n";
        return kUsage;
      }
      return run_search(sa);
    }
    if (construct->parsed()) return run_construct(ca);
    if (singer->parsed()) return run_singer(singer_q, singer_out);
    if (bounds->parsed()) return run_bounds(ba);
    if (check->parsed()) return run_check(ka);
  } catch (const dgr::BoundContradiction& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const dgr::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const dgr::DgrError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
