#pragma once

#include "qhc/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qhc {

// Noncommutative polynomial in named generators with rational coefficients;
// the common currency for relation sets evaluated on any representation.
class WordPoly {
 public:
  using Word = std::vector<std::string>;
  using Term = std::pair<Rational, Word>;

  WordPoly() = default;

  static WordPoly zero() { return WordPoly(); }
  static WordPoly one() { return constant(1); }
  static WordPoly constant(const Rational& c);
  static WordPoly gen(const std::string& name);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  WordPoly operator-() const;
  WordPoly operator+(const WordPoly& o) const;
  WordPoly operator-(const WordPoly& o) const;
  WordPoly operator*(const WordPoly& o) const;
  WordPoly operator*(const Rational& c) const;

  std::string str() const;

 private:
  void add_term(const Rational& c, const Word& w);
  std::vector<Term> terms_;
};

struct Relation {
  std::string name;
  WordPoly lhs;  // asserted to evaluate to zero
};

struct RelationSet {
  std::string name;  // Sergeev | H_d-affine | H_d-twoboundary | H_ev | H_od
  std::vector<Relation> relations;
};

// The Sergeev algebra on c_1..c_d, s_1..s_{d-1}.
RelationSet sergeev_relations(int d);
// Nazarov's affine Hecke-Clifford algebra: Sergeev plus x_1..x_d.
RelationSet affine_hecke_clifford_relations(int d);
// The two-boundary algebra in odd generators xt1, zt0..ztd.
RelationSet twoboundary_relations(int d);
// Even presentation of the quotient, including the n,p-dependent relations.
RelationSet h_even_relations(int d, int n, int p);
// Even presentation extended by the extra Clifford generator cM.
RelationSet h_odd_relations(int d, int n, int p);
// Relations of the derived elements xt_i, yt_i against zt_i and the
// Jucys-Murphy style identity with transpositions t_{j,i}.
RelationSet extended_generator_relations(int d);

}  // namespace qhc
