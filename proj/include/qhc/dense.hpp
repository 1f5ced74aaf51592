#pragma once

#include <Eigen/Core>

namespace qhc {

// Dense product that skips zero entries of the right factor.  The operators
// here are signed-permutation-like or tensor-local, so this beats the cubic
// product by orders of magnitude, and exactly so for expensive scalars.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>
mul_sparse(const Eigen::MatrixBase<DerivedA>& a_expr,
           const Eigen::MatrixBase<DerivedB>& b_expr) {
  using Scalar = typename DerivedA::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  // eval() is a no-op reference for plain matrices and materializes
  // expressions once.
  const typename Eigen::internal::eval<DerivedA>::type a =
      a_expr.derived().eval();
  const typename Eigen::internal::eval<DerivedB>::type b =
      b_expr.derived().eval();
  const Scalar zero{};
  Matrix c = Matrix::Zero(a.rows(), b.cols());
  for (Eigen::Index j = 0; j < b.cols(); ++j)
    for (Eigen::Index k = 0; k < b.rows(); ++k) {
      if (b(k, j) == zero) continue;
      for (Eigen::Index i = 0; i < a.rows(); ++i) {
        if (a(i, k) == zero) continue;
        c(i, j) += a(i, k) * b(k, j);
      }
    }
  return c;
}

}  // namespace qhc
