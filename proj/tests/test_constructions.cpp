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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "dgr/constructions.hpp"
#include "dgr/ruler.hpp"
#include "generators.hpp"

using namespace dgr;

namespace {

DgrSystem sys(int i, int j, int n, std::vector<std::vector<int>> rulers) {
  std::vector<Ruler> rs;
  for (auto& m : rulers) rs.push_back(Ruler(m));
  return DgrSystem(i, j, n, std::move(rs));
}

bool has_ruler(const DgrSystem& s, const std::vector<int>& marks) {
  for (const Ruler& r : s.rulers()) {
    if (r.marks() == marks) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("concat_compose worked examples") {
  DgrSystem a = sys(1, 3, 4, {{1, 2, 4}});
  Constructed c = concat_compose(a, a);
  CHECK(c.system == sys(2, 3, 8, {{1, 2, 4}, {5, 6, 8}}));
  CHECK(c.trace.rule_name == "concat_compose");
  CHECK(c.trace.output_header == std::array<int, 3>{2, 3, 8});

  DgrSystem two = sys(2, 3, 6, {{1, 2, 4}, {3, 5, 6}});
  Constructed reg = concat_compose(two, two);
  CHECK(reg.system.i_count() == 4);
  CHECK(reg.system.n_span() == 12);  // regular (4,3,12)
  CHECK(verify_dgr(reg.system).valid);
}

TEST_CASE("concat_compose rejects mismatched J") {
  CHECK_THROWS_AS(
      concat_compose(sys(1, 3, 4, {{1, 2, 4}}), sys(1, 2, 2, {{1, 2}})),
      DgrError);
}

TEST_CASE("thm3_extend worked example") {
  DgrSystem a = sys(1, 3, 4, {{1, 2, 4}});
  DgrSystem b = sys(1, 2, 2, {{1, 2}});
  Constructed c = thm3_extend(a, b);
  CHECK(c.system == sys(2, 3, 7, {{3, 4, 6}, {1, 2, 7}}));
  CHECK(c.trace.rule_name == "thm3_extend");

  // Empty second operand: identity.
  DgrSystem empty(0, 2, 0, {});
  CHECK(thm3_extend(a, empty).system == a);

  // Refuses na < nb.
  DgrSystem small = sys(1, 3, 4, {{1, 2, 4}});
  DgrSystem wide = sys(1, 2, 7, {{2, 7}});
  CHECK_THROWS_AS(thm3_extend(small, wide), DgrError);
}

TEST_CASE("thm3_double worked example") {
  DgrSystem b = sys(1, 2, 2, {{1, 2}});
  Constructed c = thm3_double(b);
  CHECK(c.system == sys(2, 3, 6, {{2, 3, 6}, {1, 4, 5}}));
}

TEST_CASE("gap_merge case 1 worked example") {
  DgrSystem a = sys(1, 4, 7, {{1, 2, 5, 7}});
  Gap gap{2, 2};  // empty run {3,4}
  Constructed c = gap_merge(a, gap, a);
  CHECK(c.system == sys(2, 4, 12, {{1, 2, 10, 12}, {3, 4, 7, 9}}));
  REQUIRE(c.trace.case_taken.has_value());
  CHECK(*c.trace.case_taken == "case1");
}

TEST_CASE("gap_merge case 2 fires for wide remainders") {
  // sa spans 14 with the gap {3,4}: n-w-t = 10 > m = 7, so case 2.
  DgrSystem a = sys(2, 4, 14, {{1, 2, 5, 7}, {8, 10, 13, 14}});
  auto gaps = find_gaps(a);
  REQUIRE(!gaps.empty());
  Gap gap = gaps[0];
  CHECK(gap == Gap{2, 2});
  DgrSystem b = sys(1, 4, 7, {{1, 2, 5, 7}});
  Constructed c = gap_merge(a, gap, b);
  REQUIRE(c.trace.case_taken.has_value());
  CHECK(*c.trace.case_taken == "case2");
  CHECK(c.system.i_count() == 3);
  CHECK(c.system.n_span() == 14 + 7 - 2);
  CHECK(verify_dgr(c.system).valid);
}

TEST_CASE("gap_merge rejects a non-gap") {
  DgrSystem a = sys(1, 4, 7, {{1, 2, 5, 7}});
  CHECK_THROWS_AS(gap_merge(a, Gap{1, 2}, a), DgrError);   // 2 is a mark
  CHECK_THROWS_AS(gap_merge(a, Gap{2, 1}, a), DgrError);   // not maximal
}

TEST_CASE("gap_double worked examples") {
  DgrSystem a = sys(1, 4, 7, {{1, 2, 5, 7}});
  Constructed c = gap_double(a, Gap{2, 2});
  CHECK(c.system == sys(2, 4, 10, {{1, 2, 6, 8}, {3, 5, 9, 10}}));

  DgrSystem b = sys(1, 3, 5, {{1, 2, 5}});
  Constructed d = gap_double(b, Gap{2, 2});
  CHECK(d.system.i_count() == 2);
  CHECK(d.system.n_span() == 6);
  CHECK(verify_dgr(d.system).valid);
}

TEST_CASE("shift_pair worked examples") {
  Constructed c = shift_pair(Ruler({1, 2, 5, 7}), 7);
  CHECK(c.system == sys(2, 3, 8, {{1, 5, 7}, {2, 3, 6}}));

  // Common element 2 leaves A \ {2} and (A+1) \ {5}.
  Constructed d = shift_pair(Ruler({1, 2, 4}), 4);
  CHECK(d.system == sys(2, 2, 5, {{1, 4}, {2, 3}}));

  CHECK_THROWS_AS(shift_pair(Ruler({1, 2, 4}), 5), DgrError);  // max != n
  CHECK_THROWS_AS(shift_pair(Ruler({1, 2, 3}), 3), DgrError);  // not Golomb
}

TEST_CASE("singer_ruler") {
  auto [ruler, modulus] = singer_ruler(2);
  CHECK(modulus == 7);
  CHECK(ruler.marks() == std::vector<int>{0, 1, 3});
  CHECK(is_golomb(ruler));
  auto [r3, m3] = singer_ruler(3);
  CHECK(m3 == 13);
  CHECK(is_golomb(r3));
  CHECK(r3.size() == 4);
}

TEST_CASE("trace JSON carries a format version and the full record") {
  DgrSystem a = sys(1, 4, 7, {{1, 2, 5, 7}});
  Constructed c = gap_merge(a, Gap{2, 2}, a);
  nlohmann::json j = c.trace.to_json();
  CHECK(j.at("format_version") == 1);
  CHECK(j.at("rule") == "gap_merge");
  CHECK(j.at("case") == "case1");
  CHECK(j.at("output_header") ==
        nlohmann::json({{"i", 2}, {"j", 4}, {"n", 12}}));
  CHECK(j.at("input_headers").size() == 2);
}

// ---- randomized property suites (>=100 valid inputs each) ----

TEST_CASE("property: concat_compose") {
  std::mt19937 rng(101);
  for (int round = 0; round < 110; ++round) {
    int j = 2 + round % 4;
    DgrSystem a = dgr_gen::random_system(rng, 1 + round % 3, j, round % 3);
    DgrSystem b = dgr_gen::random_system(rng, 1 + (round / 3) % 3, j);
    Constructed c = concat_compose(a, b);
    CAPTURE(round);
    REQUIRE(verify_dgr(c.system).valid);
    CHECK(c.system.i_count() == a.i_count() + b.i_count());
    CHECK(c.system.j_marks() == j);
    CHECK(c.system.n_span() == a.n_span() + b.n_span());
  }
}

TEST_CASE("property: thm3_extend") {
  std::mt19937 rng(102);
  int done = 0;
  while (done < 110) {
    int j = 3 + done % 3;
    DgrSystem a = dgr_gen::random_system(rng, 1 + done % 3, j, 2);
    DgrSystem b = dgr_gen::random_system(rng, 1 + (done / 2) % 3, j - 1);
    if (a.n_span() < b.n_span()) continue;
    Constructed c = thm3_extend(a, b);
    CAPTURE(done);
    REQUIRE(verify_dgr(c.system).valid);
    CHECK(c.system.i_count() == a.i_count() + b.i_count());
    CHECK(c.system.j_marks() == j);
    CHECK(c.system.n_span() == a.n_span() + b.n_span() + b.i_count());
    ++done;
  }
}

TEST_CASE("property: thm3_double") {
  std::mt19937 rng(103);
  for (int round = 0; round < 110; ++round) {
    int j = 3 + round % 3;
    DgrSystem b = dgr_gen::random_system(rng, 1 + round % 3, j - 1, round % 4);
    Constructed c = thm3_double(b);
    CAPTURE(round);
    REQUIRE(verify_dgr(c.system).valid);
    CHECK(c.system.i_count() == 2 * b.i_count());
    CHECK(c.system.j_marks() == j);
    CHECK(c.system.n_span() == 2 * b.n_span() + 2 * b.i_count());
  }
}

TEST_CASE("property: gap_merge covers both cases") {
  std::mt19937 rng(104);
  int case1 = 0, case2 = 0;
  int guard = 0;
  while ((case1 < 100 || case2 < 100) && guard < 20000) {
    ++guard;
    int j = 3 + guard % 3;
    // Slack creates gaps; a small or large sb steers the case.
    DgrSystem a = dgr_gen::random_system(rng, 1 + guard % 2, j, 2 + guard % 5);
    auto gaps = find_gaps(a);
    if (gaps.empty()) continue;
    Gap gap = gaps[guard % gaps.size()];
    DgrSystem b =
        dgr_gen::random_system(rng, 1 + (guard / 2) % 3, j, (guard / 3) % 6);
    Constructed c = gap_merge(a, gap, b);
    REQUIRE(verify_dgr(c.system).valid);
    CHECK(c.system.i_count() == a.i_count() + b.i_count());
    CHECK(c.system.n_span() == a.n_span() + b.n_span() - gap.width);
    REQUIRE(c.trace.case_taken.has_value());
    if (*c.trace.case_taken == "case1") ++case1;
    if (*c.trace.case_taken == "case2") ++case2;
  }
  CHECK(case1 >= 100);
  CHECK(case2 >= 100);
}

TEST_CASE("property: gap_double keeps the first copies intact") {
  std::mt19937 rng(105);
  int done = 0;
  while (done < 110) {
    int j = 3 + done % 3;
    DgrSystem a = dgr_gen::random_system(rng, 1 + done % 3, j, 2 + done % 4);
    auto gaps = find_gaps(a);
    if (gaps.empty()) continue;
    Gap gap = gaps[done % gaps.size()];
    Constructed c = gap_double(a, gap);
    CAPTURE(done);
    REQUIRE(verify_dgr(c.system).valid);
    CHECK(c.system.i_count() == 2 * a.i_count());
    CHECK(c.system.n_span() == 2 * a.n_span() - 2 * gap.width);
    // First copies: marks <= t unchanged, marks > t+w shifted as a
    // block (after the same pre-reflection the construction applies).
    int t = gap.t_offset, w = gap.width, n = a.n_span();
    DgrSystem eff = a;
    if (t > n - w - t) {
      eff = reflect_system(a);
      t = n - t - w;
    }
    for (int r = 0; r < eff.i_count(); ++r) {
      std::vector<int> expect;
      for (int x : eff.rulers()[r].marks()) {
        expect.push_back(x <= t ? x : x + n - t - 2 * w);
      }
      std::sort(expect.begin(), expect.end());
      CHECK(has_ruler(c.system, expect));
    }
    ++done;
  }
}

TEST_CASE("property: shift_pair") {
  std::mt19937 rng(106);
  int done = 0;
  while (done < 110) {
    int j = 3 + done % 4;
    DgrSystem s = dgr_gen::random_system(rng, 1, j, done % 5);
    Ruler r = s.rulers()[0];
    // Pin the max to the span so the precondition holds.
    r = translate(r, s.n_span() - r.max_mark());
    if (r.min_mark() < 1) continue;
    Constructed c = shift_pair(r, s.n_span());
    CAPTURE(done);
    REQUIRE(verify_dgr(c.system).valid);
    CHECK(c.system.i_count() == 2);
    CHECK(c.system.j_marks() == j - 1);
    CHECK(c.system.n_span() == s.n_span() + 1);
    // Containment: every output mark comes from A or A+1.
    std::set<int> allowed;
    for (int x : r.marks()) {
      allowed.insert(x);
      allowed.insert(x + 1);
    }
    for (const Ruler& out : c.system.rulers()) {
      for (int x : out.marks()) CHECK(allowed.count(x));
    }
    ++done;
  }
}
