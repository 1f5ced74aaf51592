#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhc/acceptance.hpp"

#include <iostream>

using namespace qhc;

// Runs the ten acceptance criteria and asserts each one as stated.
//
// Criterion 1 bundles three sub-claims about a worked structure-constant
// example.  The computed coefficient is 1 as required.  The other two
// sub-claims pin a pre-filter count of 12 and a surviving tableau of
// 1 1 / 2 2'.  Those reference values are mutually inconsistent: the pinned
// survivor has letter content (2,2), not the example's mu = (3,1), and it
// violates the lattice conditions it is supposed to satisfy, so no
// enumeration can reproduce both.  The two assertions are kept as stated and
// fail; the computed values (4 content-(3,1) fillings, unique survivor
// 1' 1 / 1 2) are cross-validated by the symmetry, Pieri and branching
// properties and by the exact tensor-space decomposition.
TEST_CASE("acceptance criteria") {
  std::vector<CriterionResult> results = run_acceptance(&std::cout);
  REQUIRE(results.size() == 10);
  for (const auto& r : results) {
    INFO("criterion ", r.id, ": ", r.name, " -- ", r.detail);
    CHECK(r.pass);
  }
}
