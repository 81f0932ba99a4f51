#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <utility>

// Exact integer lattice kernels on Eigen matrices. All routines work on any
// signed integral Scalar and throw std::overflow_error instead of wrapping.
namespace apll {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

template <typename Scalar>
Scalar checked_mul(Scalar a, Scalar b) {
  Scalar r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice arithmetic");
  return r;
}

template <typename Scalar>
Scalar checked_sub(Scalar a, Scalar b) {
  Scalar r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice arithmetic");
  return r;
}

template <typename Scalar>
Scalar floor_div(Scalar a, Scalar b) {
  Scalar q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// row(target) -= q * row(source)
template <typename Scalar>
void axpy_row(Matrix<Scalar>& m, Eigen::Index target, Eigen::Index source, Scalar q) {
  if (q == 0) return;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    m(target, c) = checked_sub(m(target, c), checked_mul(q, m(source, c)));
  }
}

}  // namespace detail

/// Row-style Hermite normal form of the lattice spanned by the rows of
/// `generators`. The result has one row per pivot (the lattice rank), is in
/// upper echelon form with positive pivots, and every entry above a pivot
/// lies in [0, pivot). Two generator sets span the same lattice iff their
/// HNFs are equal.
template <typename Derived>
Matrix<typename Derived::Scalar> hermite_normal_form(const Eigen::MatrixBase<Derived>& generators) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> a = generators;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index pivot_row = 0;

  for (Eigen::Index col = 0; col < cols && pivot_row < rows; ++col) {
    // Euclid on the column below pivot_row: bring the smallest non-zero
    // magnitude up and reduce the rest against it until only it remains.
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index r = pivot_row; r < rows; ++r) {
        if (a(r, col) == 0) continue;
        if (best < 0 || (a(r, col) < 0 ? -a(r, col) : a(r, col)) < (a(best, col) < 0 ? -a(best, col) : a(best, col))) {
          best = r;
        }
      }
      if (best < 0) break;
      if (best != pivot_row) a.row(best).swap(a.row(pivot_row));
      bool cleared = true;
      for (Eigen::Index r = pivot_row + 1; r < rows; ++r) {
        if (a(r, col) == 0) continue;
        detail::axpy_row(a, r, pivot_row, detail::floor_div(a(r, col), a(pivot_row, col)));
        if (a(r, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (a(pivot_row, col) == 0) continue;
    if (a(pivot_row, col) < 0) a.row(pivot_row) = -a.row(pivot_row);
    for (Eigen::Index r = 0; r < pivot_row; ++r) {
      detail::axpy_row(a, r, pivot_row, detail::floor_div(a(r, col), a(pivot_row, col)));
    }
    ++pivot_row;
  }
  return a.topRows(pivot_row);
}

/// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Derived>
typename Derived::Scalar determinant_bareiss(const Eigen::MatrixBase<Derived>& square) {
  using Scalar = typename Derived::Scalar;
  if (square.rows() != square.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix<Scalar> m = square;
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar{1};
  Scalar sign = 1;
  Scalar prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap_with = k + 1;
      while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return Scalar{0};
      m.row(k).swap(m.row(swap_with));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        const Scalar num = detail::checked_sub(detail::checked_mul(m(i, j), m(k, k)),
                                               detail::checked_mul(m(i, k), m(k, j)));
        m(i, j) = num / prev;  // exact by Sylvester's identity
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace apll
