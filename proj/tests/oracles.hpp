#pragma once

// Test-only reference computations. Nothing here calls into the Smith form
// or the cyclic multiplication under test.

#include "bu/cyclic_ring.hpp"
#include "bu/integer.hpp"

#include <random>
#include <vector>

namespace bu::oracle {

/// Echelon basis of the Z-span of `vectors` (integer row reduction with
/// Euclid on each pivot column).
struct Echelon {
  std::vector<IntVector> rows;  // rows[i] has its first non-zero at pivots[i]
  std::vector<Index> pivots;
};

inline Echelon echelon(std::vector<IntVector> vectors) {
  Echelon out;
  if (vectors.empty()) return out;
  const Index width = vectors.front().size();
  std::size_t top = 0;
  for (Index col = 0; col < width && top < vectors.size(); ++col) {
    for (;;) {
      // smallest non-zero magnitude in this column among rows >= top
      std::size_t best = vectors.size();
      for (std::size_t i = top; i < vectors.size(); ++i) {
        if (vectors[i](col) == 0) continue;
        if (best == vectors.size() || abs(vectors[i](col)) < abs(vectors[best](col))) best = i;
      }
      if (best == vectors.size()) break;
      std::swap(vectors[top], vectors[best]);
      bool clean = true;
      for (std::size_t i = top + 1; i < vectors.size(); ++i) {
        if (vectors[i](col) == 0) continue;
        const Integer q = vectors[i](col) / vectors[top](col);
        vectors[i] -= q * vectors[top];
        if (vectors[i](col) != 0) clean = false;
      }
      if (clean) {
        out.rows.push_back(vectors[top]);
        out.pivots.push_back(col);
        ++top;
        break;
      }
    }
  }
  return out;
}

inline bool echelon_contains(const Echelon& e, IntVector x) {
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    const Integer& h = e.rows[i](e.pivots[i]);
    const Integer& c = x(e.pivots[i]);
    if (c % h != 0) return false;
    x -= (c / h) * e.rows[i];
  }
  return x.isZero();
}

/// Reference lattice for the ideal ((1 - z)^n): all shifts of the folded
/// binomial, assembled coefficient by coefficient.
inline std::vector<IntVector> shifted_binomials(std::int64_t order, std::int64_t n) {
  IntVector base = IntVector::Zero(order);
  Integer c = 1;
  for (std::int64_t i = 0; i <= n; ++i) {
    base(i % order) += (i % 2 == 0) ? c : Integer(-c);
    c = c * (n - i) / (i + 1);
  }
  std::vector<IntVector> out;
  for (std::int64_t s = 0; s < order; ++s) {
    IntVector v(order);
    for (std::int64_t i = 0; i < order; ++i) v((i + s) % order) = base(i);
    out.push_back(v);
  }
  return out;
}

struct LatticeOracle {
  Echelon basis;
  Integer prime_to_p_index;  // prime-to-p part of the product of pivots

  LatticeOracle(std::int64_t order, std::int64_t p, std::int64_t n)
      : basis(echelon(shifted_binomials(order, n))), prime_to_p_index(1) {
    for (std::size_t i = 0; i < basis.rows.size(); ++i) {
      Integer h = abs(basis.rows[i](basis.pivots[i]));
      while (h % p == 0) h /= p;
      prime_to_p_index *= h;
    }
  }

  bool contains(const IntVector& x, Locality locality) const {
    if (locality == Locality::integral) return echelon_contains(basis, x);
    // x is p-locally in the lattice iff its order in (saturation / lattice)
    // is prime to p, i.e. divides the prime-to-p part of the index bound.
    return echelon_contains(basis, prime_to_p_index * x);
  }
};

/// Full product in Z[z] followed by folding exponents mod N.
inline IntVector naive_cyclic_product(const IntVector& a, const IntVector& b) {
  const Index n = a.size();
  IntVector full = IntVector::Zero(2 * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) full(i + j) += a(i) * b(j);
  IntVector out = IntVector::Zero(n);
  for (Index i = 0; i < 2 * n; ++i) out(i % n) += full(i);
  return out;
}

/// Fraction-free (Bareiss) determinant.
inline Integer bareiss_det(IntMatrix m) {
  const Index n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index swap_with = -1;
      for (Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0) swap_with = i;
      if (swap_with < 0) return 0;
      m.row(k).swap(m.row(swap_with));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline IntVector random_vector(std::mt19937_64& rng, Index size, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntVector v(size);
  for (Index i = 0; i < size; ++i) v(i) = dist(rng);
  return v;
}

}  // namespace bu::oracle
