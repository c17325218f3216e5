#pragma once

// Dense polynomials in Z[z] (no cyclic folding), coefficient i <-> z^i.

#include "bu/integer.hpp"

#include <optional>

namespace bu::poly {

/// Drops trailing zero coefficients; the zero polynomial has size 0.
template <typename Scalar>
Vector<Scalar> trimmed(const Vector<Scalar>& a) {
  Index size = a.size();
  while (size > 0 && a(size - 1) == 0) --size;
  return a.head(size);
}

/// Equality up to trailing zeros.
template <typename Scalar>
bool equal(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  const Vector<Scalar> ta = trimmed(a);
  const Vector<Scalar> tb = trimmed(b);
  return ta.size() == tb.size() && ta == tb;
}

template <typename Scalar>
Vector<Scalar> add(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  Vector<Scalar> out = Vector<Scalar>::Zero(std::max(a.size(), b.size()));
  out.head(a.size()) += a;
  out.head(b.size()) += b;
  return trimmed(out);
}

template <typename Scalar>
Vector<Scalar> sub(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  Vector<Scalar> out = Vector<Scalar>::Zero(std::max(a.size(), b.size()));
  out.head(a.size()) += a;
  out.head(b.size()) -= b;
  return trimmed(out);
}

template <typename Scalar>
Vector<Scalar> mul(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  if (a.size() == 0 || b.size() == 0) return Vector<Scalar>();
  Vector<Scalar> out = Vector<Scalar>::Zero(a.size() + b.size() - 1);
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) == 0) continue;
    out.segment(i, b.size()) += a(i) * b;
  }
  return trimmed(out);
}

/// a / d if every coefficient is divisible by d.
template <typename Scalar>
std::optional<Vector<Scalar>> divide_exact(const Vector<Scalar>& a, const Scalar& d) {
  Vector<Scalar> out(a.size());
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) % d != 0) return std::nullopt;
    out(i) = a(i) / d;
  }
  return out;
}

/// a / (1 - z) if the division is exact (equivalently a(1) = 0).
template <typename Scalar>
std::optional<Vector<Scalar>> divide_one_minus_z(const Vector<Scalar>& a) {
  const Vector<Scalar> t = trimmed(a);
  if (t.size() == 0) return Vector<Scalar>();
  // a = (1 - z) q  <=>  q_0 = a_0,  q_i = a_i + q_{i-1},  and q_{deg} vanishes.
  Vector<Scalar> q(t.size() - 1);
  Scalar running = 0;
  for (Index i = 0; i + 1 < t.size(); ++i) {
    running += t(i);
    q(i) = running;
  }
  if (running + t(t.size() - 1) != 0) return std::nullopt;
  return trimmed(q);
}

/// (1 - z^step)^e expanded with exact binomial coefficients.
template <typename Scalar>
Vector<Scalar> one_minus_monomial_power(Index step, Index e) {
  Vector<Scalar> out = Vector<Scalar>::Zero(step * e + 1);
  Scalar c = 1;
  for (Index i = 0; i <= e; ++i) {
    out(i * step) = (i % 2 == 0) ? c : Scalar(-c);
    c = c * Scalar(e - i) / Scalar(i + 1);
  }
  return trimmed(out);
}

}  // namespace bu::poly
