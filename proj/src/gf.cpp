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

#include "dgr/gf.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace dgr {

namespace {

// Polynomials over Z_p, little-endian, no trailing zeros.
using Poly = std::vector<int>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
  }
  return trim(c);
}

// Remainder of a mod m; m monic.
Poly poly_mod(Poly a, const Poly& m, int p) {
  a = trim(a);
  while (a.size() >= m.size()) {
    int lead = a.back();
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    }
    a = trim(a);
  }
  return a;
}

bool poly_divides(const Poly& d, const Poly& a, int p) {
  return poly_mod(a, d, p).empty();
}

// Monic degree-deg polynomial with little-endian coefficients given by
// the base-p digits of code.
Poly monic_from_code(long code, int deg, int p) {
  Poly poly(deg + 1, 0);
  poly[deg] = 1;
  for (int i = 0; i < deg; ++i) {
    poly[i] = static_cast<int>(code % p);
    code /= p;
  }
  return poly;
}

bool irreducible(const Poly& m, int p) {
  int deg = static_cast<int>(m.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      Poly cand = monic_from_code(code, d, p);
      // Monic divisor must itself be monic; any factor works for the
      // reducibility test.
      if (poly_divides(cand, m, p)) return false;
    }
  }
  return true;
}

// Generates all monic degree-k coefficient vectors in lexicographic
// order of the little-endian coefficient list.
Poly smallest_irreducible(int p, int k) {
  long count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  std::vector<Poly> candidates;
  candidates.reserve(count);
  for (long code = 0; code < count; ++code) {
    candidates.push_back(monic_from_code(code, k, p));
  }
  std::sort(candidates.begin(), candidates.end());
  for (const Poly& cand : candidates) {
    if (irreducible(cand, p)) return cand;
  }
  throw DgrError("no irreducible polynomial found (bug)");
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool prime_power(int q, int* p_out, int* k_out) {
  if (q < 2) return false;
  for (int p = 2; p <= q; ++p) {
    if (!is_prime(p)) continue;
    if (q % p != 0) continue;
    int k = 0;
    int v = q;
    while (v % p == 0) {
      v /= p;
      ++k;
    }
    if (v != 1) return false;
    if (p_out) *p_out = p;
    if (k_out) *k_out = k;
    return true;
  }
  return false;
}

FiniteField::FiniteField(int p, int k, long size_limit) : p_(p), k_(k) {
  if (!is_prime(p)) {
    throw DgrError("field characteristic " + std::to_string(p) +
                   " is not prime");
  }
  if (k < 1) throw DgrError("field extension degree must be >= 1");
  size_ = 1;
  for (int i = 0; i < k; ++i) {
    size_ *= p;
    if (size_ > size_limit) {
      throw DgrError("field size p^k exceeds limit " +
                     std::to_string(size_limit));
    }
  }
  modulus_ = smallest_irreducible(p, k);
}

FiniteField::Element FiniteField::one() const {
  Element e(k_, 0);
  e[0] = 1;
  return e;
}

bool FiniteField::is_zero(const Element& a) const {
  return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

FiniteField::Element FiniteField::element_from_index(long idx) const {
  if (idx < 0 || idx >= size_) throw DgrError("element index out of range");
  Element e(k_, 0);
  for (int i = 0; i < k_; ++i) {
    e[i] = static_cast<int>(idx % p_);
    idx /= p_;
  }
  return e;
}

long FiniteField::index_of(const Element& a) const {
  long idx = 0;
  for (int i = k_ - 1; i >= 0; --i) idx = idx * p_ + a[i];
  return idx;
}

FiniteField::Element FiniteField::add(const Element& a,
                                      const Element& b) const {
  Element c(k_, 0);
  for (int i = 0; i < k_; ++i) c[i] = (a[i] + b[i]) % p_;
  return c;
}

FiniteField::Element FiniteField::sub(const Element& a,
                                      const Element& b) const {
  Element c(k_, 0);
  for (int i = 0; i < k_; ++i) c[i] = ((a[i] - b[i]) % p_ + p_) % p_;
  return c;
}

FiniteField::Element FiniteField::mul(const Element& a,
                                      const Element& b) const {
  Poly product = poly_mod(poly_mul(trim(a), trim(b), p_), modulus_, p_);
  product.resize(k_, 0);
  return product;
}

FiniteField::Element FiniteField::pow(const Element& a, long e) const {
  if (e < 0) throw DgrError("negative exponent");
  Element result = one();
  Element base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

long FiniteField::order(const Element& a) const {
  if (is_zero(a)) throw DgrError("order of zero is undefined");
  Element x = a;
  long e = 1;
  while (x != one()) {
    x = mul(x, a);
    ++e;
    if (e > size_) throw DgrError("order computation ran away (bug)");
  }
  return e;
}

FiniteField::Element FiniteField::primitive_element() const {
  // Enumerate nonzero elements by ascending coefficient vector.
  std::vector<Element> elements;
  for (long idx = 1; idx < size_; ++idx) {
    elements.push_back(element_from_index(idx));
  }
  std::sort(elements.begin(), elements.end());
  for (const Element& e : elements) {
    if (order(e) == size_ - 1) return e;
  }
  throw DgrError("no primitive element found (bug)");
}

SingerSet singer_difference_set(int q) {
  int p = 0, k = 0;
  if (!prime_power(q, &p, &k)) {
    throw DgrError("q = " + std::to_string(q) + " is not a prime power");
  }
  // GF(q^3) realized directly as GF(p^{3k}); keeps the element type flat.
  FiniteField field(p, 3 * k);
  const long field_units = field.size() - 1;  // q^3 - 1
  const int modulus = q * q + q + 1;

  FiniteField::Element theta = field.primitive_element();

  // GF(q) inside GF(q^3) is the subgroup of index q^2+q+1 plus zero.
  std::set<FiniteField::Element> subfield;
  subfield.insert(field.zero());
  FiniteField::Element g = field.pow(theta, modulus);
  FiniteField::Element x = field.one();
  for (int i = 0; i < q - 1; ++i) {
    subfield.insert(x);
    x = field.mul(x, g);
  }
  if (static_cast<int>(subfield.size()) != q) {
    throw DgrError("subfield extraction failed (bug)");
  }

  // The 2-dimensional GF(q)-subspace spanned by {1, theta}.
  std::set<FiniteField::Element> subspace;
  for (const auto& c0 : subfield) {
    for (const auto& c1 : subfield) {
      subspace.insert(field.add(c0, field.mul(c1, theta)));
    }
  }

  std::set<int> residues;
  FiniteField::Element power = field.one();
  for (long i = 0; i < field_units; ++i) {
    if (subspace.count(power)) residues.insert(static_cast<int>(i % modulus));
    power = field.mul(power, theta);
  }

  std::vector<int> d(residues.begin(), residues.end());
  if (static_cast<int>(d.size()) != q + 1) {
    throw DgrError("Singer set has wrong size (bug)");
  }

  // Exhaustive perfect-difference verification.
  std::vector<int> cover(modulus, 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (i == j) continue;
      ++cover[((d[i] - d[j]) % modulus + modulus) % modulus];
    }
  }
  for (int r = 1; r < modulus; ++r) {
    if (cover[r] != 1) {
      throw DgrError("Singer difference coverage failed (bug)");
    }
  }

  // Canonical representative: lexicographically smallest 0-containing
  // translate of D or of -D (negation preserves the difference
  // property, mirroring ruler reflection).
  std::vector<int> best;
  for (int sign : {1, -1}) {
    for (int shift : d) {
      std::vector<int> cand;
      cand.reserve(d.size());
      for (int r : d) {
        cand.push_back(((sign * (r - shift)) % modulus + modulus) % modulus);
      }
      std::sort(cand.begin(), cand.end());
      if (best.empty() || cand < best) best = cand;
    }
  }
  return {best, modulus};
}

}  // namespace dgr
