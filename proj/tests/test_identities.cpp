#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhc/identities.hpp"

#include <iostream>

using namespace qhc;

TEST_CASE("kappa identities reduce to zero") {
  IdentitySuite suite = kappa_identity_suite();
  VerificationReport report = run_suite(suite);
  if (!report.pass()) std::cout << report.text();
  CHECK(report.pass());
  CHECK(report.entries.size() >= 10);
}

TEST_CASE("pair ratio suite") {
  VerificationReport report = run_suite(pair_ratio_suite());
  if (!report.pass()) std::cout << report.text();
  CHECK(report.pass());
}

TEST_CASE("quartic coefficient suite") {
  VerificationReport report = run_suite(quartic_coefficient_suite());
  if (!report.pass()) std::cout << report.text();
  CHECK(report.pass());
}

TEST_CASE("braid coefficient suite: six paths, four coefficients each") {
  VerificationReport report = run_suite(braid_coefficient_suite());
  if (!report.pass()) std::cout << report.text();
  CHECK(report.pass());
  CHECK(report.entries.size() == 24);
}

TEST_CASE("classification coefficient suite") {
  VerificationReport report = run_suite(classification_coefficient_suite());
  if (!report.pass()) std::cout << report.text();
  CHECK(report.pass());
}

TEST_CASE("a perturbed identity has a nonzero normal form") {
  IdentitySuite suite = pair_ratio_suite();
  suite.expressions[0].num =
      suite.expressions[0].num + MultiPoly::constant(*suite.ring, 1);
  VerificationReport report = run_suite(suite);
  CHECK_FALSE(report.pass());
}

TEST_CASE("zero denominators are flagged as encoding errors") {
  IdentitySuite suite = pair_ratio_suite();
  MultiPoly zero_den =
      MultiPoly::variable(*suite.ring, "mp1", 2) -
      MultiPoly::variable(*suite.ring, "m") * MultiPoly::variable(*suite.ring, "m") -
      MultiPoly::constant(*suite.ring, 1);
  suite.expressions.push_back(
      {"bad", MultiPoly::constant(*suite.ring, 1), {{zero_den, 1}}});
  CHECK_THROWS(run_suite(suite));
}
