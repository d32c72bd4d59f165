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

#ifndef DGR_GF_HPP_
#define DGR_GF_HPP_

#include <cstdint>
#include <vector>

#include "dgr/ruler.hpp"

namespace dgr {

bool is_prime(int n);

// Writes q = p^k when q is a prime power (k >= 1); returns false
// otherwise.
bool prime_power(int q, int* p_out = nullptr, int* k_out = nullptr);

// GF(p^k) as the polynomial quotient Z_p[x] / (modulus).  The modulus
// is the lexicographically smallest irreducible monic degree-k
// polynomial (little-endian coefficient comparison), so identical
// (p, k) inputs give bit-identical fields across runs.  Desk scale:
// p^k is capped (default 4096) and irreducibility is checked by trial
// division.
class FiniteField {
 public:
  // Elements are little-endian coefficient vectors of length k,
  // each coefficient in [0, p-1].
  using Element = std::vector<int>;

  static constexpr long kDefaultSizeLimit = 4096;

  FiniteField(int p, int k, long size_limit = kDefaultSizeLimit);

  int p() const { return p_; }
  int k() const { return k_; }
  long size() const { return size_; }
  // Monic modulus, length k+1, little-endian.
  const std::vector<int>& modulus() const { return modulus_; }

  Element zero() const { return Element(k_, 0); }
  Element one() const;
  bool is_zero(const Element& a) const;

  // Base-p digits of idx, little-endian; the inverse of index_of.
  Element element_from_index(long idx) const;
  long index_of(const Element& a) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, long e) const;

  // Least e >= 1 with a^e = 1; divides p^k - 1.  Throws on zero.
  long order(const Element& a) const;

  // The nonzero element with the lexicographically smallest
  // coefficient vector whose order is p^k - 1.
  Element primitive_element() const;

 private:
  int p_;
  int k_;
  long size_;
  std::vector<int> modulus_;
};

struct SingerSet {
  std::vector<int> residues;  // q+1 residues, canonical, ascending
  int modulus;                // q^2 + q + 1
};

// Singer's perfect difference set: q+1 residues mod q^2+q+1 whose
// pairwise differences cover every nonzero residue exactly once.
// Built from a primitive element of GF(q^3); the result is verified
// exhaustively before return and canonicalized to the
// lexicographically smallest translate containing 0.
SingerSet singer_difference_set(int q);

}  // namespace dgr

#endif  // DGR_GF_HPP_
