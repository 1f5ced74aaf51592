#pragma once

#include "qhc/multipoly.hpp"
#include "qhc/verify.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace qhc {

// One cleared identity: numerator over a factored denominator.  The aux
// squares in these suites are non-squares of the base field, so the quotient
// embeds in a tower of quadratic field extensions; a denominator is nonzero
// iff each factor has a nonzero normal form.
struct SuiteExpression {
  std::string name;
  MultiPoly num;
  std::vector<std::pair<MultiPoly, int>> den_factors;
};

// A named batch of rational-function identities over one square-relation
// quotient ring.  The suite passes iff every cleared numerator reduces to
// zero; a denominator factor reducing to zero is an encoding error and
// throws.
struct IdentitySuite {
  std::string name;
  std::shared_ptr<const PolyRing> ring;
  std::shared_ptr<const SquareRelationIdeal> ideal;
  std::vector<SuiteExpression> expressions;
};

VerificationReport run_suite(const IdentitySuite& suite);

// Identities among kappa_0, kappa_1 and their s_0-partners: the sum rule,
// the degree-4 relation, the squared rewriting of the primed pair, the two
// kappa-free ratio forms of p(p+1), the three equal forms of the constant c,
// and the equivalence of the two f-conditions -- in a ring carrying the five
// square roots sqrt(m), sqrt(p), sqrt(m+1), sqrt(m-p), sqrt(m-p+1).
IdentitySuite kappa_identity_suite();

// The two kappa-free ratio memberships in the sqrt(m) dictionary.
IdentitySuite pair_ratio_suite();
// The scalar coefficient identity behind the quartic relation for z1 - x1.
IdentitySuite quartic_coefficient_suite();
// The four Clifford-basis coefficients of the x1 s1 x1 s1 commutation
// residual, per orbit path, in the sqrt(m), sqrt(p) dictionary.
IdentitySuite braid_coefficient_suite();
// The closed forms of the classification coefficients a0, a1, a2.
IdentitySuite classification_coefficient_suite();

std::vector<IdentitySuite> all_identity_suites();

}  // namespace qhc
