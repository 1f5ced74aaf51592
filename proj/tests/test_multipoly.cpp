#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhc/multipoly.hpp"

#include <random>

using namespace qhc;

namespace {

// Ring and ideal of the pair-ratio dictionary: m carries sqrt(m), p is plain.
struct Fixture {
  PolyRing ring{{"m", "p", "mmp", "mp1", "mmpp1", "mmpm1"}};
  MultiPoly m = MultiPoly::variable(ring, "m");
  MultiPoly p = MultiPoly::variable(ring, "p");
  MultiPoly one = MultiPoly::constant(ring, 1);
  SquareRelationIdeal ideal{
      ring,
      {"m", "p"},
      {{"mmp", m * m - p},
       {"mp1", m * m + one},
       {"mmpp1", m * m + one - p},
       {"mmpm1", m * m - one - p}}};
};

}  // namespace

TEST_CASE("reduction examples") {
  Fixture fx;
  MultiPoly mp1 = MultiPoly::variable(fx.ring, "mp1");
  // mp1^2 - m^2 - 1 lies in the ideal.
  CHECK(fx.ideal.reduce(mp1 * mp1 - fx.m * fx.m - fx.one).is_zero());
  // Constants are already normal forms.
  MultiPoly five = MultiPoly::constant(fx.ring, 5);
  CHECK(fx.ideal.reduce(five) == five);
  // (mp1*mmp)^2 -> (m^2+1)(m^2-p).
  MultiPoly mmp = MultiPoly::variable(fx.ring, "mmp");
  MultiPoly prod = mp1 * mmp;
  MultiPoly expected = (fx.m * fx.m + fx.one) * (fx.m * fx.m - fx.p);
  CHECK(fx.ideal.reduce(prod * prod) == expected);
}

TEST_CASE("reduction is idempotent and multiplicative") {
  Fixture fx;
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> expo(0, 3);
  auto random_poly = [&]() {
    MultiPoly poly(fx.ring);
    for (int t = 0; t < 5; ++t) {
      std::vector<int> exps(fx.ring.arity());
      for (int& e : exps) e = expo(rng);
      poly.add_term(exps, coef(rng));
    }
    return poly;
  };
  for (int trial = 0; trial < 50; ++trial) {
    MultiPoly a = random_poly(), b = random_poly();
    MultiPoly na = fx.ideal.reduce(a), nb = fx.ideal.reduce(b);
    CHECK(fx.ideal.reduce(na) == na);
    CHECK(fx.ideal.reduce(a * b) == fx.ideal.reduce(na * nb));
    CHECK(fx.ideal.reduce(a + b) == fx.ideal.reduce(na + nb));
  }
}

TEST_CASE("normal forms have squarefree aux monomials") {
  Fixture fx;
  MultiPoly big = MultiPoly::variable(fx.ring, "mmp", 5) *
                  MultiPoly::variable(fx.ring, "mp1", 4) *
                  MultiPoly::variable(fx.ring, "mmpm1", 3);
  MultiPoly nf = fx.ideal.reduce(big);
  for (const auto& [exps, c] : nf.terms()) {
    CHECK(exps[fx.ring.var_index("mmp")] <= 1);
    CHECK(exps[fx.ring.var_index("mp1")] <= 1);
    CHECK(exps[fx.ring.var_index("mmpp1")] <= 1);
    CHECK(exps[fx.ring.var_index("mmpm1")] <= 1);
  }
}

TEST_CASE("unknown variables are rejected by name") {
  PolyRing small({"a", "b", "extra"});
  MultiPoly a = MultiPoly::variable(small, "a");
  SquareRelationIdeal ideal(small, {"a"}, {{"b", a * a}});
  MultiPoly bad = MultiPoly::variable(small, "extra");
  CHECK_THROWS_WITH_AS(ideal.reduce(bad), "unknown variable extra",
                       std::invalid_argument);
}

TEST_CASE("rational functions clear to numerators") {
  Fixture fx;
  RationalFunction f(fx.m, fx.p);
  RationalFunction g(fx.one, fx.m);
  RationalFunction sum = f + g;
  // m/p + 1/m = (m^2 + p) / (p m)
  CHECK(sum.num() == fx.m * fx.m + fx.p);
  CHECK(sum.den() == fx.p * fx.m);
  RationalFunction q = f / f;
  CHECK(fx.ideal.reduce(q.num() - q.den()).is_zero());
  CHECK_THROWS(f / RationalFunction(fx.ring));
}
