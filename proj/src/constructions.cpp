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

#include "dgr/constructions.hpp"

#include <algorithm>

#include "dgr/gf.hpp"

namespace dgr {

namespace {

std::array<int, 3> header_of(const DgrSystem& s) {
  return {s.i_count(), s.j_marks(), s.n_span()};
}

void require_valid(const DgrSystem& s, const char* who, const char* what) {
  ValidationReport report = verify_dgr(s);
  if (!report.valid) {
    std::string msg = std::string(who) + ": " + what + ":";
    for (const Violation& v : report.violations) {
      msg += " [" + v.describe() + "]";
    }
    throw DgrError(msg);
  }
}

// Every construction re-verifies its output before returning it.
Constructed finish(DgrSystem system, ConstructionTrace trace) {
  trace.output_header = header_of(system);
  require_valid(system, trace.rule_name.c_str(),
                "constructed system failed verification");
  return {std::move(system), std::move(trace)};
}

bool gap_belongs_to(const DgrSystem& s, Gap gap) {
  std::vector<Gap> gaps = find_gaps(s);
  return std::find(gaps.begin(), gaps.end(), gap) != gaps.end();
}

}  // namespace

nlohmann::json ConstructionTrace::to_json() const {
  nlohmann::json j;
  j["format_version"] = 1;
  j["rule"] = rule_name;
  j["input_headers"] = nlohmann::json::array();
  for (const auto& h : input_headers) {
    j["input_headers"].push_back({{"i", h[0]}, {"j", h[1]}, {"n", h[2]}});
  }
  j["output_header"] = {{"i", output_header[0]},
                        {"j", output_header[1]},
                        {"n", output_header[2]}};
  if (case_taken) j["case"] = *case_taken;
  j["params"] = parameters;
  return j;
}

Constructed concat_compose(const DgrSystem& sa, const DgrSystem& sb) {
  if (sa.j_marks() != sb.j_marks()) {
    throw DgrError("concat_compose: J mismatch");
  }
  require_valid(sa, "concat_compose", "first input invalid");
  require_valid(sb, "concat_compose", "second input invalid");

  std::vector<Ruler> rulers = sa.rulers();
  for (const Ruler& r : sb.rulers()) {
    rulers.push_back(translate(r, sa.n_span()));
  }
  ConstructionTrace trace;
  trace.rule_name = "concat_compose";
  trace.input_headers = {header_of(sa), header_of(sb)};
  return finish(DgrSystem(sa.i_count() + sb.i_count(), sa.j_marks(),
                          sa.n_span() + sb.n_span(), std::move(rulers)),
                std::move(trace));
}

Constructed thm3_extend(const DgrSystem& sa, const DgrSystem& sb) {
  if (sb.i_count() == 0) {
    // Degenerate b = 0: the construction is the identity on sa.
    require_valid(sa, "thm3_extend", "first input invalid");
    ConstructionTrace trace;
    trace.rule_name = "thm3_extend";
    trace.input_headers = {header_of(sa), header_of(sb)};
    trace.parameters = {{"n", sa.n_span()}, {"m", 0}};
    return finish(sa, std::move(trace));
  }
  if (sa.j_marks() != sb.j_marks() + 1) {
    throw DgrError("thm3_extend: second input must have J-1 marks per ruler");
  }
  if (sa.n_span() < sb.n_span()) {
    throw DgrError(
        "thm3_extend: requires sa.n >= sb.n (new differences could collide)");
  }
  require_valid(sa, "thm3_extend", "first input invalid");
  require_valid(sb, "thm3_extend", "second input invalid");

  const int n = sa.n_span();
  const int m = sb.n_span();
  const int b = sb.i_count();

  std::vector<Ruler> rulers;
  // Middle block W_i = X_i + m.
  for (const Ruler& r : sa.rulers()) rulers.push_back(translate(r, m));
  // Low block U_i = Y_i plus one fresh high mark n+m+i.
  for (int i = 0; i < b; ++i) {
    std::vector<int> marks = sb.rulers()[i].marks();
    marks.push_back(n + m + i + 1);
    rulers.push_back(Ruler(std::move(marks)));
  }
  ConstructionTrace trace;
  trace.rule_name = "thm3_extend";
  trace.input_headers = {header_of(sa), header_of(sb)};
  trace.parameters = {{"n", n}, {"m", m}, {"b", b}};
  return finish(DgrSystem(sa.i_count() + b, sa.j_marks(), n + m + b,
                          std::move(rulers)),
                std::move(trace));
}

Constructed thm3_double(const DgrSystem& sb) {
  require_valid(sb, "thm3_double", "input invalid");
  const int a = sb.i_count();
  const int m = sb.n_span();
  if (a < 1) throw DgrError("thm3_double: input must have at least one ruler");

  std::vector<Ruler> rulers;
  // U_i = (Y_i + a) u {2m+a+i}.
  for (int i = 0; i < a; ++i) {
    std::vector<int> marks;
    for (int y : sb.rulers()[i].marks()) marks.push_back(y + a);
    marks.push_back(2 * m + a + i + 1);
    rulers.push_back(Ruler(std::move(marks)));
  }
  // V_i = (Y_i + a + m) u {i}.
  for (int i = 0; i < a; ++i) {
    std::vector<int> marks;
    for (int y : sb.rulers()[i].marks()) marks.push_back(y + a + m);
    marks.push_back(i + 1);
    rulers.push_back(Ruler(std::move(marks)));
  }
  ConstructionTrace trace;
  trace.rule_name = "thm3_double";
  trace.input_headers = {header_of(sb)};
  trace.parameters = {{"a", a}, {"m", m}};
  return finish(DgrSystem(2 * a, sb.j_marks() + 1, 2 * m + 2 * a,
                          std::move(rulers)),
                std::move(trace));
}

Constructed gap_merge(const DgrSystem& sa_in, Gap gap, const DgrSystem& sb) {
  if (sa_in.j_marks() != sb.j_marks()) {
    throw DgrError("gap_merge: J mismatch");
  }
  require_valid(sa_in, "gap_merge", "first input invalid");
  require_valid(sb, "gap_merge", "second input invalid");
  if (!gap_belongs_to(sa_in, gap)) {
    throw DgrError("gap_merge: gap is not a maximal empty run of sa");
  }

  const int n = sa_in.n_span();
  const int m = sb.n_span();
  const int w = gap.width;

  // Normalize to t <= n-w-t by reflecting the whole system.
  DgrSystem sa = sa_in;
  int t = gap.t_offset;
  bool reflected = false;
  if (t > n - w - t) {
    sa = reflect_system(sa_in);
    t = n - t - w;
    reflected = true;
  }

  const int a = sa.i_count();
  const int b = sb.i_count();
  std::vector<Ruler> rulers;
  ConstructionTrace trace;
  trace.rule_name = "gap_merge";
  trace.input_headers = {header_of(sa_in), header_of(sb)};
  trace.parameters = {{"t", t}, {"w", w}, {"n", n}, {"m", m},
                      {"reflected", reflected ? 1 : 0}};

  if (n - w - t <= m) {
    // Case 1: sb fills positions t+1..t+m; sa's upper part shifts up.
    trace.case_taken = "case1";
    for (int i = 0; i < a; ++i) {
      std::vector<int> marks;
      for (int x : sa.rulers()[i].marks()) {
        if (x <= t) {
          marks.push_back(x);
        } else {
          marks.push_back(x + m - w);  // x = t+w+y -> t+m+y
        }
      }
      rulers.push_back(Ruler(std::move(marks)));
    }
    for (int i = 0; i < b; ++i) {
      std::vector<int> marks;
      for (int x : sb.rulers()[i].marks()) marks.push_back(t + x);
      rulers.push_back(Ruler(std::move(marks)));
    }
  } else {
    // Case 2: sa unchanged; sb's top w positions drop into the gap,
    // the rest append above n.
    trace.case_taken = "case2";
    for (int i = 0; i < a; ++i) rulers.push_back(sa.rulers()[i]);
    for (int i = 0; i < b; ++i) {
      std::vector<int> marks;
      for (int x : sb.rulers()[i].marks()) {
        if (x <= m - w) {
          marks.push_back(n + x);
        } else {
          marks.push_back(t + (x - (m - w)));
        }
      }
      rulers.push_back(Ruler(std::move(marks)));
    }
  }
  return finish(DgrSystem(a + b, sa.j_marks(), n + m - w, std::move(rulers)),
                std::move(trace));
}

Constructed gap_double(const DgrSystem& sa_in, Gap gap) {
  require_valid(sa_in, "gap_double", "input invalid");
  if (!gap_belongs_to(sa_in, gap)) {
    throw DgrError("gap_double: gap is not a maximal empty run of sa");
  }

  const int n = sa_in.n_span();
  const int w = gap.width;

  DgrSystem sa = sa_in;
  int t = gap.t_offset;
  bool reflected = false;
  if (t > n - w - t) {
    sa = reflect_system(sa_in);
    t = n - t - w;
    reflected = true;
  }

  const int a = sa.i_count();
  std::vector<Ruler> rulers;
  // First copies: low part stays, high marks t+w+y -> n-w+y.
  for (int i = 0; i < a; ++i) {
    std::vector<int> marks;
    for (int x : sa.rulers()[i].marks()) {
      if (x <= t) {
        marks.push_back(x);
      } else {
        marks.push_back(x + n - t - 2 * w);  // x = t+w+y -> n-w+y
      }
    }
    rulers.push_back(Ruler(std::move(marks)));
  }
  // Second copies: full reflections.  High marks land at t + (n+1-x);
  // low marks at 2n-2w+1-x.
  for (int i = 0; i < a; ++i) {
    std::vector<int> marks;
    for (int x : sa.rulers()[i].marks()) {
      if (x <= t) {
        marks.push_back(2 * n - 2 * w + 1 - x);
      } else {
        marks.push_back(t + n + 1 - x);
      }
    }
    rulers.push_back(Ruler(std::move(marks)));
  }
  ConstructionTrace trace;
  trace.rule_name = "gap_double";
  trace.input_headers = {header_of(sa_in)};
  trace.case_taken = "doubling";
  trace.parameters = {{"t", t}, {"w", w}, {"n", n},
                      {"reflected", reflected ? 1 : 0}};
  return finish(DgrSystem(2 * a, sa.j_marks(), 2 * n - 2 * w,
                          std::move(rulers)),
                std::move(trace));
}

Constructed shift_pair(const Ruler& a_ruler, int n) {
  if (a_ruler.size() < 2) {
    throw DgrError("shift_pair: ruler needs at least two marks");
  }
  if (!is_golomb(a_ruler)) {
    throw DgrError("shift_pair: input ruler is not Golomb");
  }
  if (a_ruler.min_mark() < 1) {
    throw DgrError("shift_pair: marks must be >= 1");
  }
  if (a_ruler.max_mark() != n) {
    throw DgrError("shift_pair: max mark must equal n (translate first)");
  }

  Ruler shifted = translate(a_ruler, 1);
  std::vector<int> common;
  for (int m : a_ruler.marks()) {
    if (shifted.contains(m)) common.push_back(m);
  }
  if (common.size() > 1) {
    // A Golomb ruler cannot meet its own unit shift twice.
    throw DgrError("shift_pair: input corrupted (two common elements)");
  }

  std::vector<int> first, second;
  ConstructionTrace trace;
  trace.rule_name = "shift_pair";
  trace.input_headers = {{1, a_ruler.size(), n}};
  trace.parameters = {{"n", n}};
  if (common.empty()) {
    // Disjoint: drop the largest mark from each copy.
    trace.case_taken = "disjoint";
    for (int m : a_ruler.marks()) {
      if (m != a_ruler.max_mark()) first.push_back(m);
    }
    for (int m : shifted.marks()) {
      if (m != shifted.max_mark()) second.push_back(m);
    }
  } else {
    trace.case_taken = "common-element";
    trace.parameters["common"] = common[0];
    for (int m : a_ruler.marks()) {
      if (m != common[0]) first.push_back(m);
    }
    for (int m : shifted.marks()) {
      if (m != n + 1) second.push_back(m);
    }
  }
  return finish(DgrSystem(2, a_ruler.size() - 1, n + 1,
                          {Ruler(std::move(first)), Ruler(std::move(second))}),
                std::move(trace));
}

std::pair<Ruler, int> singer_ruler(int q) {
  SingerSet set = singer_difference_set(q);
  return {Ruler(set.residues), set.modulus};
}

}  // namespace dgr
