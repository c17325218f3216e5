#pragma once

#include "bu/integer.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace bu {

/// left * A * right = diag(factors..., 0, ...) with left/right unimodular and
/// factors[0] | factors[1] | ... all positive.
template <typename Scalar>
struct SmithForm {
  Matrix<Scalar> left;
  Matrix<Scalar> right;
  std::vector<Scalar> factors;

  Index rank() const { return static_cast<Index>(factors.size()); }
};

namespace detail {

template <typename Scalar>
Scalar magnitude(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

// Smallest non-zero magnitude in a(t.., t..); false if the block is zero.
template <typename Scalar>
bool find_pivot(const Matrix<Scalar>& a, Index t, Index& row, Index& col) {
  bool found = false;
  Scalar best{};
  for (Index j = t; j < a.cols(); ++j) {
    for (Index i = t; i < a.rows(); ++i) {
      if (a(i, j) == 0) continue;
      Scalar m = magnitude(a(i, j));
      if (!found || m < best) {
        best = std::move(m);
        row = i;
        col = j;
        found = true;
        if (best == 1) return true;
      }
    }
  }
  return found;
}

template <typename Scalar>
void swap_rows(Matrix<Scalar>& a, Matrix<Scalar>& u, Index i, Index j) {
  if (i == j) return;
  a.row(i).swap(a.row(j));
  u.row(i).swap(u.row(j));
}

template <typename Scalar>
void swap_cols(Matrix<Scalar>& a, Matrix<Scalar>& w, Index i, Index j) {
  if (i == j) return;
  a.col(i).swap(a.col(j));
  w.col(i).swap(w.col(j));
}

// Subtracts q * (row t) from row i over the active columns, mirrored into u.
template <typename Scalar>
void eliminate_row(Matrix<Scalar>& a, Matrix<Scalar>& u, Index t, Index i, const Scalar& q) {
  const Index width = a.cols() - t;
  a.row(i).tail(width) -= q * a.row(t).tail(width);
  u.row(i) -= q * u.row(t);
}

template <typename Scalar>
void eliminate_col(Matrix<Scalar>& a, Matrix<Scalar>& w, Index t, Index j, const Scalar& q) {
  const Index height = a.rows() - t;
  a.col(j).tail(height) -= q * a.col(t).tail(height);
  w.col(j) -= q * w.col(t);
}

}  // namespace detail

/// Smith normal form by Euclidean elimination on both sides.
template <typename Scalar>
SmithForm<Scalar> smith_form(Matrix<Scalar> a) {
  using detail::magnitude;
  const Index rows = a.rows();
  const Index cols = a.cols();
  SmithForm<Scalar> result;
  result.left = Matrix<Scalar>::Identity(rows, rows);
  result.right = Matrix<Scalar>::Identity(cols, cols);
  Matrix<Scalar>& u = result.left;
  Matrix<Scalar>& w = result.right;

  for (Index t = 0; t < std::min(rows, cols); ++t) {
    Index pr = t;
    Index pc = t;
    if (!detail::find_pivot(a, t, pr, pc)) break;
    detail::swap_rows(a, u, t, pr);
    detail::swap_cols(a, w, t, pc);

    for (;;) {
      // Column t: reduce below the pivot; a non-zero remainder is smaller
      // than the pivot and replaces it.
      Index smallest = -1;
      for (Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const Scalar q = a(i, t) / a(t, t);
        if (q != 0) detail::eliminate_row(a, u, t, i, q);
        if (a(i, t) != 0 && (smallest < 0 || magnitude(a(i, t)) < magnitude(a(smallest, t)))) {
          smallest = i;
        }
      }
      if (smallest >= 0) {
        detail::swap_rows(a, u, t, smallest);
        continue;
      }

      for (Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const Scalar q = a(t, j) / a(t, t);
        if (q != 0) detail::eliminate_col(a, w, t, j, q);
        if (a(t, j) != 0 && (smallest < 0 || magnitude(a(t, j)) < magnitude(a(t, smallest)))) {
          smallest = j;
        }
      }
      if (smallest >= 0) {
        detail::swap_cols(a, w, t, smallest);
        continue;
      }

      // Divisibility: fold an offending row into row t and go again.
      Index offender = -1;
      for (Index i = t + 1; i < rows && offender < 0; ++i) {
        for (Index j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            offender = i;
            break;
          }
        }
      }
      if (offender < 0) break;
      a.row(t).tail(cols - t) += a.row(offender).tail(cols - t);
      u.row(t) += u.row(offender);
    }

    if (a(t, t) < 0) {
      a.row(t).tail(cols - t) = -a.row(t).tail(cols - t);
      u.row(t) = -u.row(t);
    }
    result.factors.push_back(a(t, t));
  }
  return result;
}

}  // namespace bu
