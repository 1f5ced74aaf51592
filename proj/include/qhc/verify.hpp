#pragma once

#include "qhc/calibrated.hpp"
#include "qhc/numeric.hpp"
#include "qhc/rational.hpp"
#include "qhc/wordpoly.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qhc {

struct RelationResidual {
  std::string relation;
  double residual = 0;
  bool pass = false;
};

struct VerificationReport {
  std::string subject;
  double tolerance = 0;
  bool exact = false;
  std::vector<RelationResidual> entries;

  bool pass() const;
  double max_residual() const;
  const RelationResidual* first_failure() const;
  nlohmann::json to_json() const;
  std::string text() const;
};

using ComplexGenerators = std::map<std::string, ComplexMatrix>;
using RationalGenerators = std::map<std::string, RationalMatrix>;

// Evaluates a word polynomial on named generator matrices; a missing
// generator raises an error naming it.  operand_scale, when given, receives
// the largest entry magnitude seen among the evaluated term products.
ComplexMatrix evaluate(const WordPoly& poly, const ComplexGenerators& gens,
                       double* operand_scale = nullptr);
RationalMatrix evaluate(const WordPoly& poly, const RationalGenerators& gens);

VerificationReport verify_relations(const ComplexGenerators& gens,
                                    const RelationSet& rs, double tol);
VerificationReport verify_relations(const ModuleRep& rep,
                                    const RelationSet& rs, double tol);
// Exact flavor: every relation must evaluate to the zero matrix.
VerificationReport verify_relations_exact(const RationalGenerators& gens,
                                          const RelationSet& rs);

// Tilde dictionary on the even presentation: xt1 = -x1 c1, zt_i = -z_i c_i,
// yt1 = zt1 - xt1, then the recursions
//   xt_{i+1} = s_i xt_i s_i - (c_i - c_{i+1}) s_i   (yt likewise).
ComplexGenerators derived_generators(const ModuleRep& rep);
// Same recursions on an exact generator map carrying xt1, zt0..ztd, c, s.
RationalGenerators derived_generators_exact(const RationalGenerators& gens,
                                            int d);

// Relations of the full derived family on the derived map.
VerificationReport verify_extended_generators(const ModuleRep& rep,
                                              double tol);

// (even_dim, odd_dim) of the supercommutant: parity-preserving matrices
// commuting with every generator, and parity-reversing matrices commuting
// with even generators and anticommuting with odd ones.  The z-constraints
// are imposed exactly through the joint-eigenvalue block structure; the rest
// is a least-squares nullspace with singular values thresholded at
// sv_tol * sigma_max.
std::pair<int, int> commutant_dimension(const ModuleRep& rep,
                                        double sv_tol = 1e-7);

// True iff every z_i is diagonal with the advertised spectrum and every
// joint eigenvalue has multiplicity 1 (D) or 2 (E).
bool calibrated_spectrum_check(const ModuleRep& rep, const BratteliGraph& g,
                               const StrictPartition& lambda, double tol);

// Nazarov intertwiner Phi_i = s_i (z_i^2 - z_{i+1}^2) + (z_i + z_{i+1})
//                             - c_0 c_1 (z_i - z_{i+1}).
VerificationReport intertwiner_check(const ModuleRep& rep, int i, double tol);

// Invertible even intertwiner between two modules over the same data, if one
// exists; found by matching joint eigenvectors and solving the commutation
// constraints.
std::optional<ComplexMatrix> isomorphism_check(const ModuleRep& rep_f,
                                               const ModuleRep& rep_g,
                                               double tol);

// Projection onto the joint eigenspace of (path, sign pattern); rank 1 for D
// and rank 2 for E.  Throws when a denominator vanishes, which would signal
// coinciding joint spectra.
ComplexMatrix projection_operator(const ModuleRep& rep, int path,
                                  CliffordMask eps);

// Hypothesis of the classification theorems: n^2(n+1)^2 + p^2(p+1)^2 is not
// a perfect square.  Exposed and logged; nothing branches on it.
bool classify_hypothesis_holds(int n, int p);

}  // namespace qhc
