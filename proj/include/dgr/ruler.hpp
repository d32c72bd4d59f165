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

#ifndef DGR_RULER_HPP_
#define DGR_RULER_HPP_

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace dgr {

// Domain error raised on precondition violations and internal
// consistency failures.
class DgrError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A ruler is a strictly increasing list of non-negative marks.
// Marks are sorted once at construction; all operations assume
// sortedness.  Zero is a legal mark for a standalone ruler; inside a
// DgrSystem every mark must be >= 1 (checked by verify_dgr).
class Ruler {
 public:
  Ruler() = default;
  explicit Ruler(std::vector<int> marks);

  const std::vector<int>& marks() const { return marks_; }
  int size() const { return static_cast<int>(marks_.size()); }
  bool empty() const { return marks_.empty(); }
  int min_mark() const;
  int max_mark() const;
  bool contains(int m) const;

  bool operator==(const Ruler&) const = default;
  auto operator<=>(const Ruler&) const = default;

 private:
  std::vector<int> marks_;
};

// I pairwise-disjoint J-mark Golomb rulers inside {1..n}.  The
// constructor records the header without validating it; verify_dgr
// checks every invariant so that arbitrary candidates can be examined.
// i_count == 0 with no rulers is the legal degenerate system used by
// constructions that accept an empty second operand.
class DgrSystem {
 public:
  DgrSystem(int i_count, int j_marks, int n_span, std::vector<Ruler> rulers);

  int i_count() const { return i_count_; }
  int j_marks() const { return j_marks_; }
  int n_span() const { return n_span_; }
  const std::vector<Ruler>& rulers() const { return rulers_; }

  // Sorted union of all marks (duplicates kept if rulers overlap, so
  // invalid candidates can still be inspected).
  std::vector<int> union_marks() const;

  bool operator==(const DgrSystem&) const = default;

 private:
  int i_count_;
  int j_marks_;
  int n_span_;
  std::vector<Ruler> rulers_;
};

// A maximal empty run {t_offset+1 .. t_offset+width} in a system's
// union, restricted to [1, n].
struct Gap {
  int t_offset = 0;
  int width = 0;

  bool operator==(const Gap&) const = default;
};

enum class ViolationKind {
  kDuplicateDifference,  // a ruler repeats a pairwise difference
  kOverlap,              // two rulers share a mark
  kMarkOutOfRange,       // a mark outside [1, n]
  kWrongCardinality,     // ruler count != I or mark count != J
};

struct Violation {
  ViolationKind kind;
  int ruler_a = -1;  // index of the offending ruler
  int ruler_b = -1;  // second ruler for overlaps
  int mark = -1;     // offending mark (overlap / out-of-range)
  int diff = -1;     // repeated difference value
  std::string describe() const;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

// One pairwise difference a_j - a_i (i < j, row-major enumeration
// order), flagged when the value occurs more than once in the ruler.
struct DiffEntry {
  int value;
  bool duplicate;

  bool operator==(const DiffEntry&) const = default;
};

bool is_golomb(const Ruler& r);

// All k(k-1)/2 differences in row-major (i, then j) order, each
// annotated with whether its value repeats anywhere in the list.
std::vector<DiffEntry> difference_list(const Ruler& r);

// Checks every DgrSystem invariant and reports all violations, not
// just the first.
ValidationReport verify_dgr(const DgrSystem& s);

// Shifts every mark by delta.  Throws if a mark would go negative.
Ruler translate(const Ruler& r, int delta);

// Reflection x -> n+1-x of a single ruler within [1, n].
Ruler reflect(const Ruler& r, int n);

// Reflects every mark; keeps the (I,J,n) header.  An involution.
DgrSystem reflect_system(const DgrSystem& s);

// All maximal empty runs inside [1, n], ordered by offset.  Runs
// abutting 1 or n are included.
std::vector<Gap> find_gaps(const DgrSystem& s);

// Rulers sorted by minimum mark; between s and its reflection, the one
// with the lexicographically smaller sorted union wins (full ruler
// list breaks ties).  Idempotent.
DgrSystem canonical_form(const DgrSystem& s);

}  // namespace dgr

#endif  // DGR_RULER_HPP_
