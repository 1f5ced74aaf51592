#pragma once

#include "qhc/bratteli.hpp"
#include "qhc/clifford.hpp"
#include "qhc/numeric.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qhc {

enum class ModuleVariant { EvenD, OddE };

// kappa_T(0)^2 = m p (m-p) with m the first-row length of T(0);
// kappa_T(i)^2 = c_T(i)(c_T(i)+1).  All values are positive integers here.
std::int64_t kappa_sq(const PathTableau& t, int i);
double kappa(const PathTableau& t, int i);

// Right-hand side F_T of the f-condition; requires s_0.T != star.
double f_rhs(const PathTableau& t);
// The equivalent form routed through the constant c.
double f_rhs_via_c(const PathTableau& t);

// Nonzero scalar per path with s_0-partner; entries are zero (= missing)
// where s_0.T = star.
struct FAssignment {
  std::vector<Complex> value;
  Complex at(int path) const { return value.at(path); }
};

// f(T) = principal square root of F_T (purely imaginary when F_T < 0).
FAssignment default_f(const BratteliGraph& g, const StrictPartition& lambda);

// Calibrated module with explicit generator matrices on the basis
// {c^eps v_T}, path-major, Clifford mask minor.
struct ModuleRep {
  ModuleVariant variant = ModuleVariant::EvenD;
  int n = 0, p = 0, d = 0;
  StrictPartition lambda;
  std::vector<PathTableau> paths;
  std::vector<int> s0_partner;  // per path; -1 when s_0.T = star
  CliffordOrder order;
  int cliff_bits = 0;
  Eigen::Index dim = 0;
  std::vector<int> parity;                           // per basis vector
  std::vector<std::vector<std::int64_t>> kappa_sq;   // [path][0..d]
  std::vector<std::vector<double>> kappa;            // [path][0..d]
  std::map<std::string, ComplexMatrix> gen;

  Eigen::Index index(int path, CliffordMask mask) const {
    return static_cast<Eigen::Index>(path) * (Eigen::Index{1} << cliff_bits) +
           mask;
  }
  int path_of(Eigen::Index b) const {
    return static_cast<int>(b >> cliff_bits);
  }
  CliffordMask mask_of(Eigen::Index b) const {
    return static_cast<CliffordMask>(b & ((Eigen::Index{1} << cliff_bits) - 1));
  }
  // Signed z-spectrum label of a basis vector, exact integers.
  std::vector<std::int64_t> label_of(Eigen::Index b) const;

  const ComplexMatrix& generator(const std::string& name) const;
  std::vector<std::string> generator_names() const;

  nlohmann::json to_json() const;
};

// Builds D^lambda_f (variant EvenD) or E^lambda_f (variant OddE).  Requires
// d >= 1 and an f value for every path with an s_0-partner.
ModuleRep build_module(const BratteliGraph& g, const StrictPartition& lambda,
                       ModuleVariant variant, const FAssignment& f);

}  // namespace qhc
