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

#ifndef DGR_BOUNDS_HPP_
#define DGR_BOUNDS_HPP_

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dgr/ruler.hpp"
#include "dgr/search.hpp"

namespace dgr {

constexpr int kNoBound = std::numeric_limits<int>::max();

struct CellKey {
  int i = 0;
  int j = 0;
  bool operator==(const CellKey&) const = default;
  auto operator<=>(const CellKey&) const = default;
};

// One deduction recorded against a cell.  Constructive applications
// can be replayed through the constructions module to materialize a
// witness achieving the produced bound.
struct RuleApplication {
  std::string rule_id;
  std::vector<CellKey> antecedents;
  std::string bound_kind;  // "h_upper", "h_lower", "y_upper", "y_lower"
  int value = 0;
  bool constructive = false;
  nlohmann::json params;  // rule-specific (decomposition, gap, ...)
};

struct BoundCell {
  int i = 0;
  int j = 0;
  int h_lower = 1;
  int h_upper = kNoBound;
  std::optional<int> y_lower;
  std::optional<int> y_upper;
  std::vector<RuleApplication> provenance;
  int upper_rule = -1;  // index into provenance justifying h_upper
  std::optional<DgrSystem> witness;  // achieves some recorded upper bound

  bool exact() const { return h_upper == h_lower; }
};

// Thrown when propagation derives upper < lower; carries both
// provenance chains since this always means a bug or a bad seed.
class BoundContradiction : public DgrError {
 public:
  explicit BoundContradiction(const std::string& what) : DgrError(what) {}
};

struct Conjecture2Entry {
  int i = 0, j = 0;
  int h_ij = 0, h_next = 0;
  bool holds = false;
};
struct Conjecture2Report {
  std::vector<Conjecture2Entry> entries;
  int violations = 0;
  nlohmann::json to_json() const;
};

struct Conjecture5Report {
  int i = 0;
  SearchStatus status = SearchStatus::kBudgetExceeded;
  bool confirmed = false;       // found a regular (I, I+2, I(I+2)) witness
  bool refuted = false;         // exhausted: the conjectured value fails
  std::optional<DgrSystem> witness;
  SearchStats stats;
  nlohmann::json to_json() const;
};

struct Conjecture6Entry {
  int k = 0;
  int g_k = 0;             // G(k) = H(1,k) - 1
  std::optional<int> g_k2; // G(k+2) when exact
  bool pair_evaluable = false;
  bool pair_holds = false;   // G(k+2) < k^2 + k
  bool erdos_holds = false;  // G(k) < k^2
};
struct Conjecture6Report {
  std::vector<Conjecture6Entry> entries;
  std::vector<int> unevaluated;  // k with no exact H(1,k)
  int violations = 0;
  nlohmann::json to_json() const;
};

// Provenance-tracked table of bounds on H(I,J) (and Y(I,J)), closed
// under the inequality rules by propagate().  Deterministic: rules run
// in a fixed sequence over cells in (i, j) lexicographic order.
class BoundTable {
 public:
  BoundTable(int max_i, int max_j);

  int max_i() const { return max_i_; }
  int max_j() const { return max_j_; }
  bool in_range(int i, int j) const {
    return i >= 1 && i <= max_i_ && j >= 1 && j <= max_j_;
  }
  const BoundCell& cell(int i, int j) const;
  BoundCell& cell(int i, int j);

  // An exact value backed by a verified witness (e.g. from min_n).
  void seed_exact(int i, int j, int value, const DgrSystem& witness);

  // Theorem-8 registry facts for every prime power in range; these
  // carry no witnesses and refuse materialization.
  void seed_theorem8();

  // Runs all rules to a fixpoint.  Throws BoundContradiction.
  void propagate();

  // Replays the constructive chain justifying cell (i,j)'s h_upper.
  // The result is verified, its span equals h_upper, and it is cached
  // in the cell.  Throws on non-constructive steps.
  const DgrSystem& materialize_witness(int i, int j);

  Conjecture2Report check_conjecture2() const;
  Conjecture6Report check_conjecture6() const;

  // Largest I0 such that H(i,J) = iJ is exact for all 1 <= i <= I0;
  // descriptive only (a finite table cannot certify iota(J)).
  int regular_prefix(int j) const;

  nlohmann::json to_json() const;
  // Witness files are stored beside the table, content-addressed by a
  // hash of the canonical DGR text.
  void save(const std::string& path) const;
  static BoundTable load(const std::string& path);

  bool operator==(const BoundTable& other) const;

 private:
  friend struct Propagator;
  bool improve_upper(int i, int j, int value, RuleApplication app);
  bool improve_lower(int i, int j, int value, RuleApplication app);
  bool improve_y_upper(int i, int j, int value, RuleApplication app);
  bool improve_y_lower(int i, int j, int value, RuleApplication app);
  void check_cell(const BoundCell& cell) const;
  std::string provenance_dump(const BoundCell& cell) const;

  int max_i_;
  int max_j_;
  std::vector<BoundCell> cells_;
};

// Searches for the regular (I, I+2, I(I+2)) system the conjecture
// predicts.  I must be >= 4.
Conjecture5Report check_conjecture5(int i_count, const SearchConfig& cfg);

// Content hash used for witness files (FNV-1a over canonical text).
std::string witness_hash(const DgrSystem& s);

}  // namespace dgr

#endif  // DGR_BOUNDS_HPP_
