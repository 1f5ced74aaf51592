#pragma once

#include "qhc/dense.hpp"

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 20,
    MulCost = 30,
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace qhc {

// Exact scalar: arbitrary-precision rational, always in canonical form
// (reduced, positive denominator).  gmpxx maintains the invariant.
using Rational = mpq_class;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline RationalMatrix rational_identity(Eigen::Index n) {
  RationalMatrix m = RationalMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

inline bool is_zero(const RationalMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

// Row-reduce in place; returns the pivot column of each pivot row.
inline std::vector<Eigen::Index> rref_in_place(RationalMatrix& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pr = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r)
      if (m(r, col) != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != row) m.row(pr).swap(m.row(row));
    Rational inv = 1 / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational factor = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c)
        m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline Eigen::Index rational_rank(RationalMatrix m) {
  return static_cast<Eigen::Index>(rref_in_place(m).size());
}

// Basis of the right kernel, one column per free variable, in the canonical
// RREF parameterization (free variable set to 1, listed in column order).
inline RationalMatrix kernel_basis(RationalMatrix m) {
  const Eigen::Index n = m.cols();
  std::vector<Eigen::Index> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(n, false);
  for (Eigen::Index c : pivots) is_pivot[c] = true;
  Eigen::Index nullity = n - static_cast<Eigen::Index>(pivots.size());
  RationalMatrix basis = RationalMatrix::Zero(n, nullity);
  Eigen::Index k = 0;
  for (Eigen::Index freec = 0; freec < n; ++freec) {
    if (is_pivot[freec]) continue;
    basis(freec, k) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], k) = -m(static_cast<Eigen::Index>(r), freec);
    ++k;
  }
  return basis;
}

// Solves B x = y exactly for y guaranteed to lie in the column span of B.
// Throws if it does not.
inline RationalVector solve_in_span(const RationalMatrix& b,
                                    const RationalVector& y) {
  RationalMatrix aug(b.rows(), b.cols() + 1);
  aug.leftCols(b.cols()) = b;
  aug.col(b.cols()) = y;
  std::vector<Eigen::Index> pivots = rref_in_place(aug);
  RationalVector x = RationalVector::Zero(b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == b.cols())
      throw std::domain_error("solve_in_span: vector outside span");
    x(pivots[r]) = aug(static_cast<Eigen::Index>(r), b.cols());
  }
  return x;
}

}  // namespace qhc
