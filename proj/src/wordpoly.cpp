#include "qhc/wordpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qhc {

WordPoly WordPoly::constant(const Rational& c) {
  WordPoly p;
  p.add_term(c, {});
  return p;
}

WordPoly WordPoly::gen(const std::string& name) {
  WordPoly p;
  p.add_term(1, {name});
  return p;
}

void WordPoly::add_term(const Rational& c, const Word& w) {
  if (c == 0) return;
  for (auto& [coef, word] : terms_) {
    if (word == w) {
      coef += c;
      if (coef == 0) {
        word = terms_.back().second;
        coef = terms_.back().first;
        terms_.pop_back();
      }
      return;
    }
  }
  terms_.emplace_back(c, w);
}

WordPoly WordPoly::operator-() const {
  WordPoly p;
  for (const auto& [c, w] : terms_) p.terms_.emplace_back(-c, w);
  return p;
}

WordPoly WordPoly::operator+(const WordPoly& o) const {
  WordPoly p = *this;
  for (const auto& [c, w] : o.terms_) p.add_term(c, w);
  return p;
}

WordPoly WordPoly::operator-(const WordPoly& o) const {
  WordPoly p = *this;
  for (const auto& [c, w] : o.terms_) p.add_term(-c, w);
  return p;
}

WordPoly WordPoly::operator*(const WordPoly& o) const {
  WordPoly p;
  for (const auto& [ca, wa] : terms_)
    for (const auto& [cb, wb] : o.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      p.add_term(ca * cb, w);
    }
  return p;
}

WordPoly WordPoly::operator*(const Rational& c) const {
  WordPoly p;
  if (c == 0) return p;
  for (const auto& [coef, w] : terms_) p.terms_.emplace_back(coef * c, w);
  return p;
}

std::string WordPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << terms_[i].first.get_str();
    for (const std::string& g : terms_[i].second) os << "*" << g;
  }
  return os.str();
}

namespace {

WordPoly g(const std::string& name) { return WordPoly::gen(name); }
WordPoly gi(const std::string& prefix, int i) {
  return WordPoly::gen(prefix + std::to_string(i));
}
WordPoly one() { return WordPoly::one(); }

WordPoly commutator(const WordPoly& a, const WordPoly& b) {
  return a * b - b * a;
}
WordPoly anticommutator(const WordPoly& a, const WordPoly& b) {
  return a * b + b * a;
}

// t_{j,i} = s_j s_{j+1} ... s_{i-1} ... s_{j+1} s_j, the transposition (j i).
WordPoly transposition(int j, int i) {
  WordPoly w = one();
  for (int k = j; k <= i - 1; ++k) w = w * gi("s", k);
  for (int k = i - 2; k >= j; --k) w = w * gi("s", k);
  return w;
}

void append_clifford_and_symmetric(std::vector<Relation>& out, int d) {
  for (int i = 1; i <= d; ++i)
    out.push_back({"c" + std::to_string(i) + "^2+1",
                   gi("c", i) * gi("c", i) + one()});
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      out.push_back({"c" + std::to_string(i) + " c" + std::to_string(j) +
                         " anticommute",
                     anticommutator(gi("c", i), gi("c", j))});
  for (int i = 1; i <= d - 1; ++i)
    out.push_back({"s" + std::to_string(i) + "^2-1",
                   gi("s", i) * gi("s", i) - one()});
  for (int i = 1; i <= d - 1; ++i)
    for (int j = i + 2; j <= d - 1; ++j)
      out.push_back({"s" + std::to_string(i) + " s" + std::to_string(j) +
                         " commute",
                     commutator(gi("s", i), gi("s", j))});
  for (int i = 1; i <= d - 2; ++i)
    out.push_back({"braid s" + std::to_string(i),
                   gi("s", i) * gi("s", i + 1) * gi("s", i) -
                       gi("s", i + 1) * gi("s", i) * gi("s", i + 1)});
  for (int i = 1; i <= d - 1; ++i)
    for (int j = 1; j <= d; ++j) {
      if (j == i) {
        out.push_back({"s" + std::to_string(i) + " c" + std::to_string(i),
                       gi("s", i) * gi("c", i) -
                           gi("c", i + 1) * gi("s", i)});
      } else if (j == i + 1) {
        out.push_back({"s" + std::to_string(i) + " c" + std::to_string(i + 1),
                       gi("s", i) * gi("c", i + 1) -
                           gi("c", i) * gi("s", i)});
      } else {
        out.push_back({"s" + std::to_string(i) + " c" + std::to_string(j) +
                           " commute",
                       commutator(gi("s", i), gi("c", j))});
      }
    }
}

}  // namespace

RelationSet sergeev_relations(int d) {
  RelationSet rs{"Sergeev", {}};
  append_clifford_and_symmetric(rs.relations, d);
  return rs;
}

RelationSet affine_hecke_clifford_relations(int d) {
  RelationSet rs{"H_d-affine", {}};
  append_clifford_and_symmetric(rs.relations, d);
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      rs.relations.push_back({"x" + std::to_string(i) + " x" +
                                  std::to_string(j) + " commute",
                              commutator(gi("x", i), gi("x", j))});
  for (int i = 1; i <= d - 1; ++i)
    rs.relations.push_back(
        {"s" + std::to_string(i) + " x" + std::to_string(i),
         gi("s", i) * gi("x", i) - gi("x", i + 1) * gi("s", i) + one() -
             gi("c", i) * gi("c", i + 1)});
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      if (i == j)
        rs.relations.push_back(
            {"c" + std::to_string(i) + " x" + std::to_string(i) +
                 " anticommute",
             anticommutator(gi("c", i), gi("x", i))});
      else
        rs.relations.push_back({"c" + std::to_string(i) + " x" +
                                    std::to_string(j) + " commute",
                                commutator(gi("c", i), gi("x", j))});
    }
  return rs;
}

RelationSet twoboundary_relations(int d) {
  RelationSet rs{"H_d-twoboundary", {}};
  append_clifford_and_symmetric(rs.relations, d);
  // Hecke relations
  for (int i = 1; i <= d - 1; ++i)
    rs.relations.push_back(
        {"s" + std::to_string(i) + " zt" + std::to_string(i),
         gi("s", i) * gi("zt", i) - gi("zt", i + 1) * gi("s", i) -
             gi("c", i) + gi("c", i + 1)});
  for (int i = 2; i <= d - 1; ++i)
    rs.relations.push_back({"xt1 s" + std::to_string(i) + " commute",
                            commutator(g("xt1"), gi("s", i))});
  for (int j = 0; j <= d; ++j)
    for (int i = 1; i <= d - 1; ++i)
      if (j != i && j != i + 1)
        rs.relations.push_back({"zt" + std::to_string(j) + " s" +
                                    std::to_string(i) + " commute",
                                commutator(gi("zt", j), gi("s", i))});
  // Clifford twist relations
  for (int i = 1; i <= d; ++i) {
    rs.relations.push_back({"c" + std::to_string(i) + " xt1 anticommute",
                            anticommutator(gi("c", i), g("xt1"))});
    for (int j = 0; j <= d; ++j)
      rs.relations.push_back({"c" + std::to_string(i) + " zt" +
                                  std::to_string(j) + " anticommute",
                              anticommutator(gi("c", i), gi("zt", j))});
  }
  // Polynomial relations
  if (d >= 2) {
    WordPoly xt2 = gi("s", 1) * g("xt1") * gi("s", 1) -
                   (gi("c", 1) - gi("c", 2)) * gi("s", 1);
    rs.relations.push_back({"xt1 xt2 anticommute",
                            anticommutator(g("xt1"), xt2)});
    rs.relations.push_back({"zt1 zt2 anticommute",
                            anticommutator(gi("zt", 1), gi("zt", 2))});
  }
  rs.relations.push_back({"zt0 zt1 anticommute",
                          anticommutator(gi("zt", 0), gi("zt", 1))});
  // Relations between polynomial rings
  if (d >= 2)
    rs.relations.push_back({"zt2 xt1 anticommute",
                            anticommutator(gi("zt", 2), g("xt1"))});
  rs.relations.push_back(
      {"(zt0-zt1+xt1) xt1 anticommute",
       anticommutator(gi("zt", 0) - gi("zt", 1) + g("xt1"), g("xt1"))});
  return rs;
}

RelationSet h_even_relations(int d, int n, int p) {
  RelationSet rs{"H_ev", {}};
  append_clifford_and_symmetric(rs.relations, d);
  // Hecke relations
  for (int i = 1; i <= d - 1; ++i)
    rs.relations.push_back(
        {"s" + std::to_string(i) + " z" + std::to_string(i),
         gi("s", i) * gi("z", i) - gi("z", i + 1) * gi("s", i) + one() -
             gi("c", i) * gi("c", i + 1)});
  for (int i = 2; i <= d - 1; ++i)
    rs.relations.push_back({"x1 s" + std::to_string(i) + " commute",
                            commutator(g("x1"), gi("s", i))});
  for (int j = 0; j <= d; ++j)
    for (int i = 1; i <= d - 1; ++i)
      if (j != i && j != i + 1)
        rs.relations.push_back({"z" + std::to_string(j) + " s" +
                                    std::to_string(i) + " commute",
                                commutator(gi("z", j), gi("s", i))});
  // Clifford twist relations
  rs.relations.push_back({"x1 c1 anticommute",
                          anticommutator(g("x1"), gi("c", 1))});
  for (int i = 0; i <= d; ++i)
    if (i != 1)
      rs.relations.push_back({"c" + std::to_string(i) + " x1 commute",
                              commutator(gi("c", i), g("x1"))});
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) {
      if (i == j)
        rs.relations.push_back(
            {"z" + std::to_string(i) + " c" + std::to_string(i) +
                 " anticommute",
             anticommutator(gi("z", i), gi("c", i))});
      else
        rs.relations.push_back({"c" + std::to_string(i) + " z" +
                                    std::to_string(j) + " commute",
                                commutator(gi("c", i), gi("z", j))});
    }
  // Polynomial relations
  if (d >= 2) {
    WordPoly x2 = gi("s", 1) * g("x1") * gi("s", 1) +
                  (one() - gi("c", 1) * gi("c", 2)) * gi("s", 1);
    rs.relations.push_back({"x1 x2 commute", commutator(g("x1"), x2)});
    rs.relations.push_back({"z1 z2 commute",
                            commutator(gi("z", 1), gi("z", 2))});
  }
  // Relations between polynomial rings
  if (d >= 2)
    rs.relations.push_back({"z2 x1 commute",
                            commutator(gi("z", 2), g("x1"))});
  rs.relations.push_back(
      {"(z0 c0 c1 + z1 - x1) x1 anticommute",
       anticommutator(gi("z", 0) * gi("c", 0) * gi("c", 1) + gi("z", 1) -
                          g("x1"),
                      g("x1"))});
  // Additional Sergeev relations for c0
  rs.relations.push_back({"c0^2+1", gi("c", 0) * gi("c", 0) + one()});
  for (int i = 1; i <= d; ++i)
    rs.relations.push_back({"c0 c" + std::to_string(i) + " anticommute",
                            anticommutator(gi("c", 0), gi("c", i))});
  for (int i = 1; i <= d - 1; ++i)
    rs.relations.push_back({"c0 s" + std::to_string(i) + " commute",
                            commutator(gi("c", 0), gi("s", i))});
  // Extra relations
  rs.relations.push_back(
      {"x1^2 = n(n+1)",
       g("x1") * g("x1") - WordPoly::constant(Rational(n) * (n + 1))});
  WordPoly y1 = gi("z", 1) - g("x1");
  WordPoly y1sq = y1 * y1;
  rs.relations.push_back(
      {"(z1-x1)^2 ((z1-x1)^2 - p(p+1)) = 0",
       y1sq * y1sq - y1sq * (Rational(p) * (p + 1))});
  return rs;
}

RelationSet h_odd_relations(int d, int n, int p) {
  RelationSet rs = h_even_relations(d, n, p);
  rs.name = "H_od";
  rs.relations.push_back({"cM^2+1", g("cM") * g("cM") + one()});
  for (int i = 0; i <= d; ++i)
    rs.relations.push_back({"cM c" + std::to_string(i) + " anticommute",
                            anticommutator(g("cM"), gi("c", i))});
  for (int i = 1; i <= d - 1; ++i)
    rs.relations.push_back({"cM s" + std::to_string(i) + " commute",
                            commutator(g("cM"), gi("s", i))});
  rs.relations.push_back({"cM x1 commute", commutator(g("cM"), g("x1"))});
  for (int i = 0; i <= d; ++i)
    rs.relations.push_back({"cM z" + std::to_string(i) + " commute",
                            commutator(g("cM"), gi("z", i))});
  return rs;
}

RelationSet extended_generator_relations(int d) {
  RelationSet rs{"extended-generators", {}};
  // Hecke relations for xt_i, yt_i
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d - 1; ++j) {
      if (i == j || i == j + 1) continue;
      rs.relations.push_back({"xt" + std::to_string(i) + " s" +
                                  std::to_string(j) + " commute",
                              commutator(gi("xt", i), gi("s", j))});
      rs.relations.push_back({"yt" + std::to_string(i) + " s" +
                                  std::to_string(j) + " commute",
                              commutator(gi("yt", i), gi("s", j))});
    }
  // Clifford twist relations
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      rs.relations.push_back({"c" + std::to_string(j) + " xt" +
                                  std::to_string(i) + " anticommute",
                              anticommutator(gi("c", j), gi("xt", i))});
      rs.relations.push_back({"c" + std::to_string(j) + " yt" +
                                  std::to_string(i) + " anticommute",
                              anticommutator(gi("c", j), gi("yt", i))});
    }
  // Polynomial relations
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      rs.relations.push_back({"xt" + std::to_string(i) + " xt" +
                                  std::to_string(j) + " anticommute",
                              anticommutator(gi("xt", i), gi("xt", j))});
      rs.relations.push_back({"yt" + std::to_string(i) + " yt" +
                                  std::to_string(j) + " anticommute",
                              anticommutator(gi("yt", i), gi("yt", j))});
    }
  for (int i = 0; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      rs.relations.push_back({"zt" + std::to_string(i) + " zt" +
                                  std::to_string(j) + " anticommute",
                              anticommutator(gi("zt", i), gi("zt", j))});
  // Relations between polynomial rings
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      rs.relations.push_back({"xt" + std::to_string(i) + " zt" +
                                  std::to_string(j) + " anticommute",
                              anticommutator(gi("xt", i), gi("zt", j))});
      rs.relations.push_back({"yt" + std::to_string(i) + " zt" +
                                  std::to_string(j) + " anticommute",
                              anticommutator(gi("yt", i), gi("zt", j))});
    }
  rs.relations.push_back(
      {"(zt0+zt1-yt1) yt1 anticommute",
       anticommutator(gi("zt", 0) + gi("zt", 1) - gi("yt", 1), gi("yt", 1))});
  // Jucys-Murphy style identity (jm)
  for (int i = 1; i <= d; ++i) {
    WordPoly rhs = gi("zt", i);
    for (int j = 1; j <= i - 1; ++j)
      rhs = rhs - (gi("c", j) - gi("c", i)) * transposition(j, i);
    rs.relations.push_back({"xt" + std::to_string(i) + "+yt" +
                                std::to_string(i) + " = zt" +
                                std::to_string(i) + " - sum",
                            gi("xt", i) + gi("yt", i) - rhs});
  }
  return rs;
}

}  // namespace qhc
