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

#include "dgr/bounds.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "dgr/constructions.hpp"
#include "dgr/gf.hpp"
#include "dgr/io.hpp"

namespace dgr {

namespace {

nlohmann::json app_to_json(const RuleApplication& app) {
  nlohmann::json j;
  j["rule"] = app.rule_id;
  j["antecedents"] = nlohmann::json::array();
  for (const CellKey& key : app.antecedents) {
    j["antecedents"].push_back({{"i", key.i}, {"j", key.j}});
  }
  j["bound_kind"] = app.bound_kind;
  j["value"] = app.value;
  j["constructive"] = app.constructive;
  j["params"] = app.params;
  return j;
}

RuleApplication app_from_json(const nlohmann::json& j) {
  RuleApplication app;
  app.rule_id = j.at("rule").get<std::string>();
  for (const auto& a : j.at("antecedents")) {
    app.antecedents.push_back({a.at("i").get<int>(), a.at("j").get<int>()});
  }
  app.bound_kind = j.at("bound_kind").get<std::string>();
  app.value = j.at("value").get<int>();
  app.constructive = j.at("constructive").get<bool>();
  app.params = j.at("params");
  return app;
}

int ceil_div(int num, int den) { return (num + den - 1) / den; }

// Largest gap of a system, if any.
std::optional<Gap> widest_gap(const DgrSystem& s) {
  std::optional<Gap> best;
  for (const Gap& g : find_gaps(s)) {
    if (!best || g.width > best->width) best = g;
  }
  return best;
}

}  // namespace

std::string witness_hash(const DgrSystem& s) {
  std::string text = emit_dgr(canonical_form(s));
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

BoundTable::BoundTable(int max_i, int max_j) : max_i_(max_i), max_j_(max_j) {
  if (max_i < 1 || max_j < 1) throw DgrError("table dimensions must be >= 1");
  cells_.resize(static_cast<std::size_t>(max_i) * max_j);
  for (int i = 1; i <= max_i; ++i) {
    for (int j = 1; j <= max_j; ++j) {
      BoundCell& c = cell(i, j);
      c.i = i;
      c.j = j;
      // Disjointness forces IJ positions.
      c.h_lower = i * j;
      c.provenance.push_back(
          {"floor", {}, "h_lower", i * j, false, nlohmann::json::object()});
      c.y_lower = i * j;
    }
  }
}

const BoundCell& BoundTable::cell(int i, int j) const {
  if (!in_range(i, j)) throw DgrError("cell out of range");
  return cells_[static_cast<std::size_t>(i - 1) * max_j_ + (j - 1)];
}

BoundCell& BoundTable::cell(int i, int j) {
  if (!in_range(i, j)) throw DgrError("cell out of range");
  return cells_[static_cast<std::size_t>(i - 1) * max_j_ + (j - 1)];
}

std::string BoundTable::provenance_dump(const BoundCell& c) const {
  std::ostringstream os;
  os << "H(" << c.i << "," << c.j << ") in [" << c.h_lower << ", ";
  if (c.h_upper == kNoBound) {
    os << "inf";
  } else {
    os << c.h_upper;
  }
  os << "]; provenance:";
  for (const RuleApplication& app : c.provenance) {
    os << " {" << app.rule_id << " -> " << app.bound_kind << "=" << app.value;
    for (const CellKey& a : app.antecedents) {
      os << " (" << a.i << "," << a.j << ")";
    }
    os << "}";
  }
  return os.str();
}

void BoundTable::check_cell(const BoundCell& c) const {
  if (c.h_upper < c.h_lower) {
    throw BoundContradiction("bound contradiction at " + provenance_dump(c));
  }
  if (c.y_lower && c.y_upper && *c.y_upper < *c.y_lower) {
    throw BoundContradiction("Y bound contradiction at " + provenance_dump(c));
  }
}

bool BoundTable::improve_upper(int i, int j, int value, RuleApplication app) {
  BoundCell& c = cell(i, j);
  if (value == c.h_upper && app.constructive && c.upper_rule >= 0 &&
      !c.provenance[c.upper_rule].constructive) {
    // Same bound, but now with a replayable derivation: re-point the
    // justification without treating it as progress.
    app.bound_kind = "h_upper";
    app.value = value;
    c.provenance.push_back(std::move(app));
    c.upper_rule = static_cast<int>(c.provenance.size()) - 1;
    return false;
  }
  if (value >= c.h_upper) return false;
  c.h_upper = value;
  app.bound_kind = "h_upper";
  app.value = value;
  c.provenance.push_back(std::move(app));
  c.upper_rule = static_cast<int>(c.provenance.size()) - 1;
  check_cell(c);
  return true;
}

bool BoundTable::improve_lower(int i, int j, int value, RuleApplication app) {
  BoundCell& c = cell(i, j);
  if (value <= c.h_lower) return false;
  c.h_lower = value;
  app.bound_kind = "h_lower";
  app.value = value;
  c.provenance.push_back(std::move(app));
  check_cell(c);
  return true;
}

bool BoundTable::improve_y_upper(int i, int j, int value, RuleApplication app) {
  BoundCell& c = cell(i, j);
  if (c.y_upper && value >= *c.y_upper) return false;
  c.y_upper = value;
  app.bound_kind = "y_upper";
  app.value = value;
  c.provenance.push_back(std::move(app));
  check_cell(c);
  return true;
}

bool BoundTable::improve_y_lower(int i, int j, int value, RuleApplication app) {
  BoundCell& c = cell(i, j);
  if (c.y_lower && value <= *c.y_lower) return false;
  c.y_lower = value;
  app.bound_kind = "y_lower";
  app.value = value;
  c.provenance.push_back(std::move(app));
  check_cell(c);
  return true;
}

void BoundTable::seed_exact(int i, int j, int value, const DgrSystem& witness) {
  if (witness.i_count() != i || witness.j_marks() != j ||
      witness.n_span() != value) {
    throw DgrError("seed witness header does not match the claimed value");
  }
  if (!verify_dgr(witness).valid) {
    throw DgrError("seed witness fails verification");
  }
  RuleApplication app{"seed-search", {}, "", value, true,
                      nlohmann::json::object()};
  improve_upper(i, j, value, app);
  improve_lower(i, j, value, app);
  BoundCell& c = cell(i, j);
  if (c.h_lower != value || c.h_upper != value) {
    throw BoundContradiction("seed H(" + std::to_string(i) + "," +
                             std::to_string(j) + ")=" + std::to_string(value) +
                             " conflicts with " + provenance_dump(c));
  }
  c.witness = witness;
  // Re-point the upper justification at the seed even if an earlier
  // deduction already reached the same value.
  if (c.upper_rule < 0 || c.provenance[c.upper_rule].value != value ||
      c.provenance[c.upper_rule].rule_id != "seed-search") {
    RuleApplication mark{"seed-search", {}, "h_upper", value, true,
                         nlohmann::json::object()};
    c.provenance.push_back(mark);
    c.upper_rule = static_cast<int>(c.provenance.size()) - 1;
  }
}

void BoundTable::seed_theorem8() {
  int limit = std::max(max_i_, max_j_) + 1;
  for (int q = 2; q <= limit; ++q) {
    if (!prime_power(q)) continue;
    RuleApplication eq{"thm8-eq", {}, "", 0, false, {{"p", q}}};
    if (in_range(q + 1, q)) {
      improve_upper(q + 1, q, q * q + q, eq);
      improve_lower(q + 1, q, q * q + q, eq);
    }
    RuleApplication ub{"thm8-ub", {}, "", 0, false, {{"p", q}}};
    if (q >= 2 && in_range(q, q - 1)) {
      improve_upper(q, q - 1, q * q - 2, ub);
    }
    if (q >= 2 && in_range(q - 1, q)) {
      improve_upper(q - 1, q, q * q - 1, ub);
    }
  }
}

void BoundTable::propagate() {
  auto hu = [this](int i, int j) { return cell(i, j).h_upper; };

  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= max_i_; ++i) {
      for (int j = 1; j <= max_j_; ++j) {
        // R1: side-by-side composition.
        for (int a = 1; 2 * a <= i; ++a) {
          int b = i - a;
          if (hu(a, j) == kNoBound || hu(b, j) == kNoBound) continue;
          RuleApplication app{"concat",
                              {{a, j}, {b, j}},
                              "",
                              0,
                              true,
                              {{"a", a}, {"b", b}}};
          changed |= improve_upper(i, j, hu(a, j) + hu(b, j), app);
        }
        // R2: extension construction (column j from column j-1).
        if (j >= 3) {
          for (int b = 1; b < i; ++b) {
            int a = i - b;
            if (hu(a, j) == kNoBound || hu(b, j - 1) == kNoBound) continue;
            // Generalized applicability: H(a,J) >= H(b,J-1).
            if (hu(a, j) < hu(b, j - 1)) continue;
            RuleApplication app{"thm3-extend",
                                {{a, j}, {b, j - 1}},
                                "",
                                0,
                                true,
                                {{"a", a}, {"b", b}}};
            changed |= improve_upper(i, j, hu(a, j) + hu(b, j - 1) + b, app);
          }
        }
        // R3: extension doubling.
        if (j >= 3 && i % 2 == 0) {
          int a = i / 2;
          if (hu(a, j - 1) != kNoBound) {
            RuleApplication app{"thm3-double",
                                {{a, j - 1}},
                                "",
                                0,
                                true,
                                {{"a", a}}};
            changed |= improve_upper(i, j, 2 * hu(a, j - 1) + 2 * a, app);
          }
        }
        // R4 (analytic): gap floor from exact non-regular cells.
        if (j >= 3) {
          for (int a = 1; a < i; ++a) {
            int b = i - a;
            const BoundCell& ca = cell(a, j);
            if (!ca.exact() || ca.h_lower < a * j + 1) continue;
            int w = ceil_div(ca.h_lower - a * j, a * j - 1);
            if (hu(b, j) != kNoBound) {
              RuleApplication app{"thm5-floor",
                                  {{a, j}, {b, j}},
                                  "",
                                  0,
                                  false,
                                  {{"a", a}, {"b", b}, {"w", w}}};
              changed |=
                  improve_upper(i, j, ca.h_lower + hu(b, j) - w, app);
            }
            if (b == a) {
              RuleApplication app{"thm5-floor-double",
                                  {{a, j}},
                                  "",
                                  0,
                                  false,
                                  {{"a", a}, {"w", w}}};
              changed |= improve_upper(i, j, 2 * ca.h_lower - 2 * w, app);
            }
          }
        }
        // R4 (witness strength): actual gaps of stored witnesses.
        if (j >= 3) {
          for (int a = 1; a < i; ++a) {
            int b = i - a;
            const BoundCell& ca = cell(a, j);
            if (!ca.witness) continue;
            std::optional<Gap> gap = widest_gap(*ca.witness);
            if (!gap) continue;
            int span = ca.witness->n_span();
            if (hu(b, j) != kNoBound) {
              RuleApplication app{
                  "gap-merge",
                  {{a, j}, {b, j}},
                  "",
                  0,
                  true,
                  {{"a", a}, {"b", b}, {"w", gap->width}, {"t", gap->t_offset}}};
              changed |=
                  improve_upper(i, j, span + hu(b, j) - gap->width, app);
            }
            if (b == a) {
              RuleApplication app{
                  "gap-double",
                  {{a, j}},
                  "",
                  0,
                  true,
                  {{"a", a}, {"w", gap->width}, {"t", gap->t_offset}}};
              changed |= improve_upper(i, j, 2 * span - 2 * gap->width, app);
            }
          }
        }
        // R5: unit-shift pair, H(2, J-1) <= H(1, J) + 1.
        if (i == 2 && j + 1 <= max_j_ && j + 1 >= 3 &&
            hu(1, j + 1) != kNoBound) {
          RuleApplication app{"shift-pair", {{1, j + 1}}, "", 0, true,
                              nlohmann::json::object()};
          changed |= improve_upper(i, j, hu(1, j + 1) + 1, app);
        }
        // R8: monotone bounds from dropping a ruler or a mark.
        if (i + 1 <= max_i_) {
          if (hu(i + 1, j) != kNoBound) {
            RuleApplication app{"drop-ruler", {{i + 1, j}}, "", 0, true,
                                nlohmann::json::object()};
            changed |= improve_upper(i, j, hu(i + 1, j), app);
          }
          RuleApplication low{"mono-lower", {{i, j}}, "", 0, false,
                              nlohmann::json::object()};
          changed |= improve_lower(i + 1, j, cell(i, j).h_lower, low);
        }
        if (j + 1 <= max_j_) {
          if (hu(i, j + 1) != kNoBound) {
            RuleApplication app{"drop-mark", {{i, j + 1}}, "", 0, true,
                                nlohmann::json::object()};
            changed |= improve_upper(i, j, hu(i, j + 1), app);
          }
          RuleApplication low{"mono-lower", {{i, j}}, "", 0, false,
                              nlohmann::json::object()};
          changed |= improve_lower(i, j + 1, cell(i, j).h_lower, low);
        }
      }
    }

    // R6: doubling of (near-)regular ranges, per column.
    for (int j = 3; j <= max_j_; ++j) {
      auto range_ok = [&](int i) {
        const BoundCell& c = cell(i, j);
        if (i % 2 == 1) return c.exact() && c.h_lower == i * j;
        return c.h_upper <= i * j + 1;
      };
      for (int i1 = 1; i1 <= max_i_; ++i1) {
        if (!range_ok(i1)) continue;
        int i2 = i1;
        while (i2 + 1 <= max_i_ && range_ok(i2 + 1)) ++i2;
        if (i2 > i1) {
          for (int target = 2 * i1; target <= std::min(2 * i2, max_i_);
               ++target) {
            RuleApplication app{"range-double",
                                {{i1, j}, {i2, j}},
                                "",
                                0,
                                false,
                                {{"i1", i1}, {"i2", i2}}};
            changed |= improve_upper(target, j, target * j, app);
          }
        }
        i1 = i2;
      }
    }

    // R7: Y bounds.
    for (int j = 1; j <= max_j_; ++j) {
      if (5 * j <= max_j_ && hu(1, 5 * j) != kNoBound) {
        RuleApplication app{"ruzsa", {{1, 5 * j}}, "", 0, false,
                            nlohmann::json::object()};
        changed |= improve_y_upper(1, j, hu(1, 5 * j), app);
      }
      if (j >= 3) {
        for (int i = 1; i + 1 <= max_i_; ++i) {
          const BoundCell& c = cell(i, j);
          if (!c.y_upper) continue;
          RuleApplication app{"y-step", {{i, j}}, "", 0, false,
                              nlohmann::json::object()};
          changed |= improve_y_upper(i + 1, j, *c.y_upper + j, app);
        }
      }
      for (int i = 1; i <= max_i_; ++i) {
        RuleApplication app{"y-floor", {{i, j}}, "", 0, false,
                            nlohmann::json::object()};
        changed |= improve_y_lower(i, j, cell(i, j).h_lower, app);
      }
    }
  }
}

const DgrSystem& BoundTable::materialize_witness(int i, int j) {
  static thread_local std::set<std::pair<int, int>> in_progress;
  BoundCell& c = cell(i, j);
  if (c.h_upper == kNoBound) {
    throw DgrError("no upper bound to materialize for H(" + std::to_string(i) +
                   "," + std::to_string(j) + ")");
  }
  if (c.witness && c.witness->n_span() == c.h_upper) return *c.witness;
  if (!in_progress.insert({i, j}).second) {
    throw DgrError("cyclic materialization chain (bug)");
  }
  struct Guard {
    std::set<std::pair<int, int>>* set;
    std::pair<int, int> key;
    ~Guard() { set->erase(key); }
  } guard{&in_progress, {i, j}};

  if (c.upper_rule < 0) {
    throw DgrError("upper bound of H(" + std::to_string(i) + "," +
                   std::to_string(j) + ") has no recorded justification");
  }
  const RuleApplication app = c.provenance[c.upper_rule];
  if (!app.constructive) {
    throw DgrError("chain for H(" + std::to_string(i) + "," +
                   std::to_string(j) + ") contains non-constructive step '" +
                   app.rule_id + "'");
  }

  DgrSystem result(0, 0, 0, {});
  if (app.rule_id == "seed-search") {
    throw DgrError("seeded cell lost its witness (bug)");
  } else if (app.rule_id == "concat") {
    int a = app.params.at("a").get<int>();
    int b = app.params.at("b").get<int>();
    DgrSystem wa = materialize_witness(a, j);
    DgrSystem wb = materialize_witness(b, j);
    result = concat_compose(wa, wb).system;
  } else if (app.rule_id == "thm3-extend") {
    int a = app.params.at("a").get<int>();
    int b = app.params.at("b").get<int>();
    DgrSystem wa = materialize_witness(a, j);
    DgrSystem wb = materialize_witness(b, j - 1);
    result = thm3_extend(wa, wb).system;
  } else if (app.rule_id == "thm3-double") {
    int a = app.params.at("a").get<int>();
    DgrSystem wa = materialize_witness(a, j - 1);
    result = thm3_double(wa).system;
  } else if (app.rule_id == "gap-merge") {
    int a = app.params.at("a").get<int>();
    int b = app.params.at("b").get<int>();
    const BoundCell& ca = cell(a, j);
    if (!ca.witness) throw DgrError("gap-merge antecedent lost its witness");
    Gap gap{app.params.at("t").get<int>(), app.params.at("w").get<int>()};
    DgrSystem wb = materialize_witness(b, j);
    result = gap_merge(*ca.witness, gap, wb).system;
  } else if (app.rule_id == "gap-double") {
    int a = app.params.at("a").get<int>();
    const BoundCell& ca = cell(a, j);
    if (!ca.witness) throw DgrError("gap-double antecedent lost its witness");
    Gap gap{app.params.at("t").get<int>(), app.params.at("w").get<int>()};
    result = gap_double(*ca.witness, gap).system;
  } else if (app.rule_id == "shift-pair") {
    DgrSystem w1 = materialize_witness(1, j + 1);
    Ruler r = w1.rulers().at(0);
    r = translate(r, w1.n_span() - r.max_mark());
    result = shift_pair(r, w1.n_span()).system;
  } else if (app.rule_id == "drop-ruler") {
    DgrSystem ws = materialize_witness(i + 1, j);
    std::vector<Ruler> rulers(ws.rulers().begin(), ws.rulers().end() - 1);
    result = DgrSystem(i, j, ws.n_span(), std::move(rulers));
  } else if (app.rule_id == "drop-mark") {
    DgrSystem ws = materialize_witness(i, j + 1);
    std::vector<Ruler> rulers;
    for (const Ruler& r : ws.rulers()) {
      std::vector<int> marks(r.marks().begin(), r.marks().end() - 1);
      rulers.push_back(Ruler(std::move(marks)));
    }
    result = DgrSystem(i, j, ws.n_span(), std::move(rulers));
  } else {
    throw DgrError("unknown constructive rule '" + app.rule_id + "'");
  }

  if (!verify_dgr(result).valid) {
    throw DgrError("materialized witness fails verification (bug)");
  }
  if (result.n_span() != c.h_upper) {
    throw DgrError("materialized span " + std::to_string(result.n_span()) +
                   " does not equal bound " + std::to_string(c.h_upper) +
                   " for H(" + std::to_string(i) + "," + std::to_string(j) +
                   ")");
  }
  c.witness = std::move(result);
  return *c.witness;
}

Conjecture2Report BoundTable::check_conjecture2() const {
  Conjecture2Report report;
  for (int j = 1; j <= max_j_; ++j) {
    for (int i = 1; i + 1 <= max_i_; ++i) {
      const BoundCell& a = cell(i, j);
      const BoundCell& b = cell(i + 1, j);
      if (!a.exact() || !b.exact()) continue;
      Conjecture2Entry e;
      e.i = i;
      e.j = j;
      e.h_ij = a.h_lower;
      e.h_next = b.h_lower;
      e.holds = b.h_lower <= a.h_lower + j;
      if (!e.holds) ++report.violations;
      report.entries.push_back(e);
    }
  }
  return report;
}

Conjecture6Report BoundTable::check_conjecture6() const {
  Conjecture6Report report;
  auto g_of = [this](int k) -> std::optional<int> {
    if (k < 1 || k > max_j_) return std::nullopt;
    const BoundCell& c = cell(1, k);
    if (!c.exact()) return std::nullopt;
    return c.h_lower - 1;  // translate the witness to start at 1
  };
  for (int k = 1; k <= max_j_; ++k) {
    std::optional<int> gk = g_of(k);
    if (!gk) {
      report.unevaluated.push_back(k);
      continue;
    }
    Conjecture6Entry e;
    e.k = k;
    e.g_k = *gk;
    e.erdos_holds = *gk < k * k;
    if (!e.erdos_holds) ++report.violations;
    e.g_k2 = g_of(k + 2);
    // The paired form is asserted only for k >= 6.
    if (e.g_k2 && k >= 6) {
      e.pair_evaluable = true;
      e.pair_holds = *e.g_k2 < k * k + k;
      if (!e.pair_holds) ++report.violations;
    }
    report.entries.push_back(e);
  }
  return report;
}

int BoundTable::regular_prefix(int j) const {
  int prefix = 0;
  for (int i = 1; i <= max_i_; ++i) {
    const BoundCell& c = cell(i, j);
    if (c.exact() && c.h_lower == i * j) {
      prefix = i;
    } else {
      break;
    }
  }
  return prefix;
}

nlohmann::json BoundTable::to_json() const {
  nlohmann::json j;
  j["format_version"] = 1;
  j["max_i"] = max_i_;
  j["max_j"] = max_j_;
  j["cells"] = nlohmann::json::array();
  for (const BoundCell& c : cells_) {
    nlohmann::json cj;
    cj["i"] = c.i;
    cj["j"] = c.j;
    cj["h_lower"] = c.h_lower;
    if (c.h_upper != kNoBound) cj["h_upper"] = c.h_upper;
    cj["exact"] = c.exact();
    if (c.y_lower) cj["y_lower"] = *c.y_lower;
    if (c.y_upper) cj["y_upper"] = *c.y_upper;
    cj["provenance"] = nlohmann::json::array();
    for (const RuleApplication& app : c.provenance) {
      cj["provenance"].push_back(app_to_json(app));
    }
    cj["upper_rule"] = c.upper_rule;
    if (c.witness) cj["witness_ref"] = witness_hash(*c.witness) + ".dgr";
    j["cells"].push_back(cj);
  }
  return j;
}

void BoundTable::save(const std::string& path) const {
  namespace fs = std::filesystem;
  std::ofstream out(path);
  if (!out) throw DgrError("cannot write " + path);
  out << to_json().dump(2) << '\n';
  fs::path witness_dir = fs::path(path).concat(".witnesses");
  for (const BoundCell& c : cells_) {
    if (!c.witness) continue;
    fs::create_directories(witness_dir);
    write_dgr_file((witness_dir / (witness_hash(*c.witness) + ".dgr")).string(),
                   *c.witness);
  }
}

BoundTable BoundTable::load(const std::string& path) {
  namespace fs = std::filesystem;
  std::ifstream in(path);
  if (!in) throw DgrError("cannot open " + path);
  nlohmann::json j;
  in >> j;
  if (j.at("format_version").get<int>() != 1) {
    throw DgrError("unsupported bounds table format version");
  }
  BoundTable table(j.at("max_i").get<int>(), j.at("max_j").get<int>());
  fs::path witness_dir = fs::path(path).concat(".witnesses");
  for (const auto& cj : j.at("cells")) {
    BoundCell& c = table.cell(cj.at("i").get<int>(), cj.at("j").get<int>());
    c.h_lower = cj.at("h_lower").get<int>();
    c.h_upper = cj.contains("h_upper") ? cj.at("h_upper").get<int>() : kNoBound;
    if (cj.contains("y_lower")) c.y_lower = cj.at("y_lower").get<int>();
    if (cj.contains("y_upper")) c.y_upper = cj.at("y_upper").get<int>();
    c.provenance.clear();
    for (const auto& aj : cj.at("provenance")) {
      c.provenance.push_back(app_from_json(aj));
    }
    c.upper_rule = cj.at("upper_rule").get<int>();
    if (cj.contains("witness_ref")) {
      fs::path wpath = witness_dir / cj.at("witness_ref").get<std::string>();
      c.witness = parse_dgr_file(wpath.string());
    }
    table.check_cell(c);
  }
  return table;
}

bool BoundTable::operator==(const BoundTable& other) const {
  return to_json() == other.to_json();
}

nlohmann::json Conjecture2Report::to_json() const {
  nlohmann::json j;
  j["format_version"] = 1;
  j["conjecture"] = 2;
  j["violations"] = violations;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : entries) {
    j["entries"].push_back({{"i", e.i},
                            {"j", e.j},
                            {"h_ij", e.h_ij},
                            {"h_next", e.h_next},
                            {"holds", e.holds}});
  }
  return j;
}

nlohmann::json Conjecture5Report::to_json() const {
  nlohmann::json j;
  j["format_version"] = 1;
  j["conjecture"] = 5;
  j["i"] = i;
  j["status"] = to_string(status);
  j["confirmed"] = confirmed;
  j["refuted"] = refuted;
  j["nodes"] = stats.nodes;
  j["elapsed_s"] = stats.elapsed_s;
  return j;
}

nlohmann::json Conjecture6Report::to_json() const {
  nlohmann::json j;
  j["format_version"] = 1;
  j["conjecture"] = 6;
  j["violations"] = violations;
  j["unevaluated"] = unevaluated;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json ej{{"k", e.k},
                      {"g_k", e.g_k},
                      {"erdos_holds", e.erdos_holds},
                      {"pair_evaluable", e.pair_evaluable}};
    if (e.g_k2) {
      ej["g_k2"] = *e.g_k2;
      ej["pair_holds"] = e.pair_holds;
    }
    j["entries"].push_back(ej);
  }
  return j;
}

Conjecture5Report check_conjecture5(int i_count, const SearchConfig& cfg) {
  if (i_count < 4) {
    throw DgrError("conjecture 5 is stated for I >= 4");
  }
  Conjecture5Report report;
  report.i = i_count;
  int j = i_count + 2;
  SearchOutcome outcome = exists_dgr(i_count, j, i_count * j, cfg);
  report.status = outcome.status;
  report.stats = outcome.stats;
  report.confirmed = outcome.status == SearchStatus::kFound;
  report.refuted = outcome.status == SearchStatus::kExhausted;
  report.witness = std::move(outcome.witness);
  return report;
}

}  // namespace dgr
