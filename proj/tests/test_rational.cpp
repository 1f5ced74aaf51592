#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhc/numeric.hpp"
#include "qhc/rational.hpp"

#include <random>

using namespace qhc;

TEST_CASE("rationals stay canonical") {
  Rational q = rat(4, -6);
  CHECK(q == rat(-2, 3));
  CHECK(q.get_den() == 3);  // positive denominator
  CHECK(rat(0, 7) == rat(0, 1));
  CHECK_THROWS(rat(1, 0));
}

TEST_CASE("field axioms on randomized inputs") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 40);
  for (int trial = 0; trial < 500; ++trial) {
    Rational a = rat(num(rng), den(rng));
    Rational b = rat(num(rng), den(rng));
    Rational c = rat(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + 0 == a);
    CHECK(a * 1 == a);
    CHECK(a + (-a) == 0);
    if (a != 0) CHECK(a * (1 / a) == 1);
  }
}

TEST_CASE("exact rank, kernel and span solving") {
  RationalMatrix m(3, 4);
  m << 1, 2, 3, 4, 2, 4, 6, 8, 1, 0, 1, 0;
  CHECK(rational_rank(m) == 2);
  RationalMatrix k = kernel_basis(m);
  CHECK(k.cols() == 2);
  for (Eigen::Index c = 0; c < k.cols(); ++c) {
    RationalVector img = m * RationalVector(k.col(c));
    for (Eigen::Index i = 0; i < img.size(); ++i) CHECK(img(i) == 0);
  }

  RationalMatrix b(3, 2);
  b << 1, 0, 0, 1, 1, 1;
  RationalVector y(3);
  y << rat(1, 2), rat(1, 3), rat(5, 6);
  RationalVector x = solve_in_span(b, y);
  RationalVector back = b * x;
  for (Eigen::Index i = 0; i < 3; ++i) CHECK(back(i) == y(i));
  RationalVector outside(3);
  outside << 1, 0, 0;
  CHECK_THROWS(solve_in_span(b, outside));
}

TEST_CASE("approx_zero tolerance semantics") {
  CHECK(approx_zero({0, 0}, 1e6, 1e-9));
  CHECK(approx_zero({1e-12, 0}, 1.0, 1e-9));
  CHECK_FALSE(approx_zero({1e-3, 0}, 1.0, 1e-9));
  // scale lifts the cutoff
  CHECK(approx_zero({1e-4, 0}, 1e6, 1e-9));
  CHECK_FALSE(approx_zero({0, 1e-3}, 1.0, 1e-9));
}
