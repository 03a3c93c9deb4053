#ifndef PCK_DENSE_HPP
#define PCK_DENSE_HPP

// Exact dense linear algebra over any field type providing +, -, *,
// inverse(), and the free functions is_zero / zero_like / one_like.
// Matrices are plain Eigen containers; all arithmetic is spelled out here
// since Eigen's kernels assume an inexact, default-constructible field.

#include <Eigen/Core>
#include <vector>

#include "pck/cyclotomic.hpp"
#include "pck/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<pck::Rational> : GenericNumTraits<pck::Rational> {
  using Real = pck::Rational;
  using NonInteger = pck::Rational;
  using Nested = pck::Rational;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 4, AddCost = 16, MulCost = 16 };
};

template <>
struct NumTraits<pck::CycScalar> : GenericNumTraits<pck::CycScalar> {
  using Real = pck::CycScalar;
  using NonInteger = pck::CycScalar;
  using Nested = pck::CycScalar;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 8, AddCost = 64, MulCost = 64 };
};

}  // namespace Eigen

namespace pck {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

template <class Scalar>
DenseMatrix<Scalar> filled(Index rows, Index cols, const Scalar& value) {
  DenseMatrix<Scalar> m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) m(r, c) = value;
  }
  return m;
}

template <class Scalar>
bool row_is_zero(const DenseMatrix<Scalar>& m, Index r, Index col_begin = 0, Index col_end = -1) {
  if (col_end < 0) col_end = m.cols();
  for (Index c = col_begin; c < col_end; ++c) {
    if (!is_zero(m(r, c))) return false;
  }
  return true;
}

/// Reduced row echelon form in place; zero rows are dropped. Pivots are
/// chosen left to right (ascending column), so the result is canonical for
/// the row space. Returns the pivot column of each remaining row.
template <class Scalar>
std::vector<Index> rref(DenseMatrix<Scalar>& m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const Scalar inv = m(row, col).inverse();
    for (Index c = col; c < m.cols(); ++c) {
      if (!is_zero(m(row, c))) m(row, c) = m(row, c) * inv;
    }
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const Scalar f = m(r, col);
      for (Index c = col; c < m.cols(); ++c) {
        if (!is_zero(m(row, c))) m(r, c) = m(r, c) - f * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  m.conservativeResize(row, Eigen::NoChange);
  return pivots;
}

/// Pivot columns of a matrix already in RREF.
template <class Scalar>
std::vector<Index> pivot_columns(const DenseMatrix<Scalar>& m) {
  std::vector<Index> pivots;
  for (Index r = 0; r < m.rows(); ++r) {
    Index c = 0;
    while (c < m.cols() && is_zero(m(r, c))) ++c;
    pivots.push_back(c);
  }
  return pivots;
}

/// Remainder of `v` (a row vector) after elimination against an RREF basis.
/// Linear in v; zero iff v lies in the row space.
template <class Scalar>
std::vector<Scalar> reduce_against(const DenseMatrix<Scalar>& basis, std::vector<Scalar> v) {
  const auto pivots = pivot_columns(basis);
  for (Index r = 0; r < basis.rows(); ++r) {
    const Scalar f = v[static_cast<std::size_t>(pivots[r])];
    if (is_zero(f)) continue;
    for (Index c = 0; c < basis.cols(); ++c) {
      if (!is_zero(basis(r, c))) v[static_cast<std::size_t>(c)] = v[static_cast<std::size_t>(c)] - f * basis(r, c);
    }
  }
  return v;
}

/// Stacks two matrices with equal column counts.
template <class Scalar>
DenseMatrix<Scalar> vstack(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  DenseMatrix<Scalar> out(a.rows() + b.rows(), a.cols());
  if (a.rows() > 0) out.topRows(a.rows()) = a;
  if (b.rows() > 0) out.bottomRows(b.rows()) = b;
  return out;
}

/// Basis (as RREF rows) of { x : m * x = 0 }.
template <class Scalar>
DenseMatrix<Scalar> null_space(DenseMatrix<Scalar> m, const Scalar& zero) {
  const Index n = m.cols();
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  DenseMatrix<Scalar> out = filled<Scalar>(n - static_cast<Index>(pivots.size()), n, zero);
  Index row = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    out(row, free) = one_like(zero);
    for (Index r = 0; r < static_cast<Index>(pivots.size()); ++r) {
      if (!is_zero(m(r, free))) out(row, pivots[r]) = -m(r, free);
    }
    ++row;
  }
  rref(out);
  return out;
}

/// Row space intersection by the Zassenhaus (double RREF) construction:
/// reduce [[A, A], [B, 0]]; rows with a vanishing left half span A cap B.
template <class Scalar>
DenseMatrix<Scalar> intersect_rows(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b, const Scalar& zero) {
  const Index n = a.cols();
  DenseMatrix<Scalar> z = filled<Scalar>(a.rows() + b.rows(), 2 * n, zero);
  for (Index r = 0; r < a.rows(); ++r) {
    for (Index c = 0; c < n; ++c) {
      z(r, c) = a(r, c);
      z(r, n + c) = a(r, c);
    }
  }
  for (Index r = 0; r < b.rows(); ++r) {
    for (Index c = 0; c < n; ++c) z(a.rows() + r, c) = b(r, c);
  }
  rref(z);
  std::vector<Index> keep;
  for (Index r = 0; r < z.rows(); ++r) {
    if (row_is_zero(z, r, 0, n)) keep.push_back(r);
  }
  DenseMatrix<Scalar> out = filled<Scalar>(static_cast<Index>(keep.size()), n, zero);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Index c = 0; c < n; ++c) out(static_cast<Index>(i), c) = z(keep[i], n + c);
  }
  rref(out);
  return out;
}

template <class Scalar>
bool same_matrix(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index r = 0; r < a.rows(); ++r) {
    for (Index c = 0; c < a.cols(); ++c) {
      if (!(a(r, c) == b(r, c))) return false;
    }
  }
  return true;
}

}  // namespace pck

#endif  // PCK_DENSE_HPP
