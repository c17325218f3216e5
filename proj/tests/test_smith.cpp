#include "bu/smith.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace bu;

namespace {

template <typename S>
Matrix<S> random_matrix(std::mt19937_64& rng, Index rows, Index cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  Matrix<S> m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = S(dist(rng));
  return m;
}

IntMatrix widen(const Matrix<std::int64_t>& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

template <typename S>
void check_smith(const Matrix<S>& a) {
  const auto f = smith_form<S>(a);
  Matrix<S> diag = Matrix<S>::Zero(a.rows(), a.cols());
  for (Index i = 0; i < f.rank(); ++i) diag(i, i) = f.factors[i];
  CHECK(f.left * a * f.right == diag);
  for (Index i = 0; i < f.rank(); ++i) {
    CHECK(f.factors[i] > 0);
    if (i + 1 < f.rank()) CHECK(f.factors[i + 1] % f.factors[i] == 0);
  }
  IntMatrix u, w;
  if constexpr (std::is_same_v<S, Integer>) {
    u = f.left;
    w = f.right;
  } else {
    u = widen(f.left);
    w = widen(f.right);
  }
  CHECK(abs(oracle::bareiss_det(u)) == 1);
  CHECK(abs(oracle::bareiss_det(w)) == 1);
}

}  // namespace

TEST_CASE("classic three by three example") {
  Matrix<std::int64_t> a(3, 3);
  a << 2, 4, 4, -6, 6, 12, 10, -4, -16;
  const auto f = smith_form<std::int64_t>(a);
  CHECK(f.factors == std::vector<std::int64_t>{2, 6, 12});
  check_smith<std::int64_t>(a);
}

TEST_CASE("zero and degenerate shapes") {
  const auto zero = smith_form<Integer>(IntMatrix::Zero(3, 2));
  CHECK(zero.rank() == 0);
  CHECK(zero.left.rows() == 3);
  CHECK(zero.right.rows() == 2);

  IntMatrix row(1, 3);
  row << 6, 10, 15;
  const auto f = smith_form<Integer>(row);
  REQUIRE(f.rank() == 1);
  CHECK(f.factors[0] == 1);
}

TEST_CASE("random matrices, both scalar types") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<int> size(1, 6);
    const Index rows = size(rng);
    const Index cols = size(rng);
    const auto a = random_matrix<std::int64_t>(rng, rows, cols, 9);
    check_smith<std::int64_t>(a);
    check_smith<Integer>(widen(a));
    CHECK(smith_form<Integer>(widen(a)).rank() == smith_form<std::int64_t>(a).rank());
    const auto small = smith_form<std::int64_t>(a).factors;
    const auto big = smith_form<Integer>(widen(a)).factors;
    REQUIRE(small.size() == big.size());
    for (std::size_t i = 0; i < small.size(); ++i) CHECK(Integer(small[i]) == big[i]);
  }
}

TEST_CASE("low rank products") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto left = random_matrix<Integer>(rng, 5, 2, 5);
    const auto right = random_matrix<Integer>(rng, 2, 6, 5);
    const IntMatrix a = left * right;
    check_smith<Integer>(a);
    CHECK(smith_form<Integer>(a).rank() <= 2);
  }
}
