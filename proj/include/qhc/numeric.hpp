#pragma once

#include "qhc/dense.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>

namespace qhc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kDefaultTolerance = 1e-9;

// Default verification tolerance; QHC_TOLERANCE overrides it process-wide.
inline double default_tolerance() {
  if (const char* env = std::getenv("QHC_TOLERANCE")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return kDefaultTolerance;
}

inline bool approx_zero(Complex x, double scale, double tol) {
  if (!(tol > 0)) return false;
  return std::abs(x) <= tol * std::max(1.0, scale);
}

inline double max_abs(const ComplexMatrix& m) {
  double v = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      v = std::max(v, std::abs(m(i, j)));
  return v;
}

// Scaled residual: largest entry of `m` relative to the size of the
// operands it was built from.
inline double scaled_residual(const ComplexMatrix& m, double operand_scale) {
  return max_abs(m) / std::max(1.0, operand_scale);
}

}  // namespace qhc
