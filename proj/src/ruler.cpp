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

#include "dgr/ruler.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dgr {

Ruler::Ruler(std::vector<int> marks) : marks_(std::move(marks)) {
  std::sort(marks_.begin(), marks_.end());
  for (std::size_t i = 0; i < marks_.size(); ++i) {
    if (marks_[i] < 0) {
      throw DgrError("ruler mark " + std::to_string(marks_[i]) +
                     " is negative");
    }
    if (i > 0 && marks_[i] == marks_[i - 1]) {
      throw DgrError("duplicate ruler mark " + std::to_string(marks_[i]));
    }
  }
}

int Ruler::min_mark() const {
  if (marks_.empty()) throw DgrError("min_mark of empty ruler");
  return marks_.front();
}

int Ruler::max_mark() const {
  if (marks_.empty()) throw DgrError("max_mark of empty ruler");
  return marks_.back();
}

bool Ruler::contains(int m) const {
  return std::binary_search(marks_.begin(), marks_.end(), m);
}

DgrSystem::DgrSystem(int i_count, int j_marks, int n_span,
                     std::vector<Ruler> rulers)
    : i_count_(i_count),
      j_marks_(j_marks),
      n_span_(n_span),
      rulers_(std::move(rulers)) {
  if (i_count < 0 || j_marks < 0 || n_span < 0) {
    throw DgrError("negative DGR header field");
  }
}

std::vector<int> DgrSystem::union_marks() const {
  std::vector<int> all;
  for (const Ruler& r : rulers_) {
    all.insert(all.end(), r.marks().begin(), r.marks().end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::string Violation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case ViolationKind::kDuplicateDifference:
      os << "ruler " << ruler_a << " repeats difference " << diff;
      break;
    case ViolationKind::kOverlap:
      os << "rulers " << ruler_a << " and " << ruler_b << " overlap at mark "
         << mark;
      break;
    case ViolationKind::kMarkOutOfRange:
      os << "ruler " << ruler_a << " mark " << mark << " outside [1, n]";
      break;
    case ViolationKind::kWrongCardinality:
      os << "cardinality mismatch (ruler " << ruler_a << ")";
      break;
  }
  return os.str();
}

bool is_golomb(const Ruler& r) {
  const std::vector<int>& m = r.marks();
  std::vector<bool> seen;
  if (!m.empty()) seen.assign(static_cast<std::size_t>(m.back()) + 1, false);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      int d = m[j] - m[i];
      if (seen[d]) return false;
      seen[d] = true;
    }
  }
  return true;
}

std::vector<DiffEntry> difference_list(const Ruler& r) {
  const std::vector<int>& m = r.marks();
  std::vector<DiffEntry> out;
  std::map<int, int> counts;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      int d = m[j] - m[i];
      out.push_back({d, false});
      ++counts[d];
    }
  }
  for (DiffEntry& e : out) e.duplicate = counts[e.value] > 1;
  return out;
}

ValidationReport verify_dgr(const DgrSystem& s) {
  ValidationReport report;
  auto flag = [&report](Violation v) {
    report.valid = false;
    report.violations.push_back(std::move(v));
  };

  if (static_cast<int>(s.rulers().size()) != s.i_count()) {
    flag({ViolationKind::kWrongCardinality, -1, -1, -1, -1});
  }
  for (int idx = 0; idx < static_cast<int>(s.rulers().size()); ++idx) {
    const Ruler& r = s.rulers()[idx];
    if (r.size() != s.j_marks()) {
      flag({ViolationKind::kWrongCardinality, idx, -1, -1, -1});
    }
    for (int m : r.marks()) {
      if (m < 1 || m > s.n_span()) {
        flag({ViolationKind::kMarkOutOfRange, idx, -1, m, -1});
      }
    }
    // Report each repeated difference value once per ruler.
    std::map<int, int> counts;
    for (const DiffEntry& e : difference_list(r)) ++counts[e.value];
    for (const auto& [d, c] : counts) {
      if (c > 1) flag({ViolationKind::kDuplicateDifference, idx, -1, -1, d});
    }
  }
  for (int a = 0; a < static_cast<int>(s.rulers().size()); ++a) {
    for (int b = a + 1; b < static_cast<int>(s.rulers().size()); ++b) {
      for (int m : s.rulers()[a].marks()) {
        if (s.rulers()[b].contains(m)) {
          flag({ViolationKind::kOverlap, a, b, m, -1});
        }
      }
    }
  }
  return report;
}

Ruler translate(const Ruler& r, int delta) {
  if (!r.empty() && r.min_mark() + delta < 0) {
    throw DgrError("translate would produce a negative mark");
  }
  std::vector<int> shifted = r.marks();
  for (int& m : shifted) m += delta;
  return Ruler(shifted);
}

Ruler reflect(const Ruler& r, int n) {
  std::vector<int> out;
  out.reserve(r.size());
  for (int m : r.marks()) out.push_back(n + 1 - m);
  return Ruler(out);
}

DgrSystem reflect_system(const DgrSystem& s) {
  std::vector<Ruler> rulers;
  rulers.reserve(s.rulers().size());
  for (const Ruler& r : s.rulers()) rulers.push_back(reflect(r, s.n_span()));
  return DgrSystem(s.i_count(), s.j_marks(), s.n_span(), std::move(rulers));
}

std::vector<Gap> find_gaps(const DgrSystem& s) {
  std::vector<bool> occupied(static_cast<std::size_t>(s.n_span()) + 1, false);
  for (const Ruler& r : s.rulers()) {
    for (int m : r.marks()) {
      if (m >= 1 && m <= s.n_span()) occupied[m] = true;
    }
  }
  std::vector<Gap> gaps;
  int run_start = 0;  // first empty position of the current run, 0 = none
  for (int v = 1; v <= s.n_span() + 1; ++v) {
    bool empty = v <= s.n_span() && !occupied[v];
    if (empty && run_start == 0) run_start = v;
    if (!empty && run_start != 0) {
      gaps.push_back({run_start - 1, v - run_start});
      run_start = 0;
    }
  }
  return gaps;
}

namespace {

std::vector<Ruler> sorted_by_min(std::vector<Ruler> rulers) {
  std::sort(rulers.begin(), rulers.end(), [](const Ruler& a, const Ruler& b) {
    return a.min_mark() < b.min_mark();
  });
  return rulers;
}

}  // namespace

DgrSystem canonical_form(const DgrSystem& s) {
  DgrSystem fwd(s.i_count(), s.j_marks(), s.n_span(),
                sorted_by_min(s.rulers()));
  DgrSystem rev = reflect_system(s);
  rev = DgrSystem(rev.i_count(), rev.j_marks(), rev.n_span(),
                  sorted_by_min(rev.rulers()));
  std::vector<int> u_fwd = fwd.union_marks();
  std::vector<int> u_rev = rev.union_marks();
  if (u_rev < u_fwd) return rev;
  if (u_fwd < u_rev) return fwd;
  return rev.rulers() < fwd.rulers() ? rev : fwd;
}

}  // namespace dgr
