#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <cstdint>

namespace bu {

/// Arbitrary precision integer. Expression templates are off so the type
/// composes cleanly with Eigen's own expression machinery.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<Integer>;
using IntMatrix = Matrix<Integer>;
using Index = Eigen::Index;

bool is_prime(std::int64_t n);

/// base^exp; throws InvalidInput when the result leaves int64 range.
std::int64_t checked_pow(std::int64_t base, std::int64_t exp);

/// Exponent of p in a non-zero value.
int valuation(std::int64_t value, std::int64_t p);
int valuation(const Integer& value, std::int64_t p);

/// Python-style modulus, result in [0, modulus).
inline std::int64_t floor_mod(std::int64_t value, std::int64_t modulus) {
  const std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

}  // namespace bu
