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

#include <set>
#include <vector>

#include "dgr/gf.hpp"

using namespace dgr;

TEST_CASE("is_prime and prime_power") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));  // 7*13

  int p = 0, k = 0;
  CHECK(prime_power(8, &p, &k));
  CHECK(p == 2);
  CHECK(k == 3);
  CHECK(prime_power(9, &p, &k));
  CHECK(p == 3);
  CHECK(k == 2);
  CHECK(prime_power(7, &p, &k));
  CHECK(k == 1);
  CHECK(!prime_power(1));
  CHECK(!prime_power(6));
  CHECK(!prime_power(12));
}

TEST_CASE("prime field arithmetic") {
  FiniteField f(7, 1);
  auto a = f.element_from_index(3);
  auto b = f.element_from_index(5);
  CHECK(f.index_of(f.add(a, b)) == 1);   // 3+5 = 8 = 1 mod 7
  CHECK(f.index_of(f.mul(a, b)) == 1);   // 15 = 1 mod 7
  CHECK(f.index_of(f.sub(a, b)) == 5);   // -2 = 5 mod 7
  CHECK(f.index_of(f.pow(a, 6)) == 1);   // Fermat
  CHECK(f.order(a) == 6);                // 3 generates GF(7)*
}

TEST_CASE("extension field axioms sampled exhaustively at GF(8) and GF(9)") {
  for (auto [p, k] : {std::pair{2, 3}, std::pair{3, 2}}) {
    FiniteField f(p, k);
    long q = f.size();
    // Multiplicative group: every nonzero element's order divides q-1,
    // and a primitive element hits q-1 exactly.
    for (long idx = 1; idx < q; ++idx) {
      long o = f.order(f.element_from_index(idx));
      CHECK((q - 1) % o == 0);
    }
    CHECK(f.order(f.primitive_element()) == q - 1);
    // Distributivity spot check over all triples is O(q^3) = fine here.
    for (long x = 0; x < q; ++x) {
      for (long y = 0; y < q; ++y) {
        auto a = f.element_from_index(x);
        auto b = f.element_from_index(y);
        CHECK(f.index_of(f.sub(f.add(a, b), b)) == x);
        auto c = f.element_from_index((x * 7 + y) % q);
        CHECK(f.mul(a, f.add(b, c)) ==
              f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

TEST_CASE("field construction is deterministic and bounded") {
  FiniteField a(2, 4), b(2, 4);
  CHECK(a.modulus() == b.modulus());
  CHECK(a.primitive_element() == b.primitive_element());
  CHECK_THROWS_AS(FiniteField(2, 13), DgrError);  // 8192 > 4096 cap
  CHECK_THROWS_AS(FiniteField(4, 2), DgrError);   // p must be prime
}

TEST_CASE("singer difference sets are perfect") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    SingerSet set = singer_difference_set(q);
    int modulus = q * q + q + 1;
    CHECK(set.modulus == modulus);
    REQUIRE(static_cast<int>(set.residues.size()) == q + 1);
    CHECK(set.residues[0] == 0);
    std::set<int> seen;
    for (int a : set.residues) {
      for (int b : set.residues) {
        if (a == b) continue;
        int d = ((a - b) % modulus + modulus) % modulus;
        CHECK(seen.insert(d).second);  // each difference exactly once
      }
    }
    CHECK(static_cast<int>(seen.size()) == modulus - 1);
  }
}

TEST_CASE("singer canonical form for q=2") {
  SingerSet set = singer_difference_set(2);
  CHECK(set.residues == std::vector<int>{0, 1, 3});
  CHECK(set.modulus == 7);
}

TEST_CASE("singer rejects non prime powers") {
  CHECK_THROWS_AS(singer_difference_set(6), DgrError);
  CHECK_THROWS_AS(singer_difference_set(1), DgrError);
}
