#pragma once

#include "qhc/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace qhc {

// Fixed, ordered variable set shared by the polynomials of one suite.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> vars);

  int arity() const { return static_cast<int>(vars_.size()); }
  const std::string& var_name(int i) const { return vars_.at(i); }
  int var_index(const std::string& name) const;

  bool operator==(const PolyRing& other) const { return vars_ == other.vars_; }

 private:
  std::vector<std::string> vars_;
  std::map<std::string, int> index_;
};

// Multivariate polynomial with exact rational coefficients.  Terms map a
// fixed-length exponent vector to its coefficient; zero coefficients are
// never stored.
class MultiPoly {
 public:
  using Terms = std::map<std::vector<int>, Rational>;

  explicit MultiPoly(const PolyRing& ring) : ring_(&ring) {}

  static MultiPoly constant(const PolyRing& ring, const Rational& c);
  static MultiPoly variable(const PolyRing& ring, const std::string& name,
                            int power = 1);

  const PolyRing& ring() const { return *ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  void add_term(const std::vector<int>& exps, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& c) const;
  MultiPoly pow(int e) const;
  bool operator==(const MultiPoly& o) const;

  // Substitutes a double value per variable; used only by tests that
  // sanity-check an encoded identity against floating point.
  double evaluate(const std::vector<double>& values) const;

  std::string str() const;

 private:
  const PolyRing* ring_;
  Terms terms_;
};

// Quotient by relations of the shape aux^2 = poly(base).  The quotient is a
// free module over the base polynomial ring with squarefree aux monomials as
// basis, so iterated substitution of squares is a complete normal form.
class SquareRelationIdeal {
 public:
  SquareRelationIdeal(const PolyRing& ring, std::vector<std::string> base_vars,
                      std::map<std::string, MultiPoly> aux_squares);

  const PolyRing& ring() const { return *ring_; }
  bool is_base(int var) const;
  bool is_aux(int var) const { return square_of_.count(var) != 0; }

  MultiPoly reduce(const MultiPoly& p) const;

 private:
  const PolyRing* ring_;
  std::vector<int> base_;
  std::map<int, MultiPoly> square_of_;
};

// Formal quotient of polynomials; no cancellation is attempted.  Identities
// are decided by reducing the cleared numerator.
class RationalFunction {
 public:
  explicit RationalFunction(const PolyRing& ring)
      : num_(MultiPoly::constant(ring, 0)),
        den_(MultiPoly::constant(ring, 1)) {}
  RationalFunction(MultiPoly num, MultiPoly den);
  // NOLINTNEXTLINE(google-explicit-constructor): polynomials embed naturally.
  RationalFunction(const MultiPoly& p)
      : num_(p), den_(MultiPoly::constant(p.ring(), 1)) {}

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction pow(int e) const;

 private:
  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace qhc
