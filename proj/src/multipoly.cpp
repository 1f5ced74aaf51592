#include "qhc/multipoly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qhc {

PolyRing::PolyRing(std::vector<std::string> vars) : vars_(std::move(vars)) {
  for (int i = 0; i < static_cast<int>(vars_.size()); ++i) {
    if (!index_.emplace(vars_[i], i).second)
      throw std::invalid_argument("duplicate ring variable " + vars_[i]);
  }
}

int PolyRing::var_index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw std::invalid_argument("unknown variable " + name);
  return it->second;
}

MultiPoly MultiPoly::constant(const PolyRing& ring, const Rational& c) {
  MultiPoly p(ring);
  p.add_term(std::vector<int>(ring.arity(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const PolyRing& ring, const std::string& name,
                              int power) {
  MultiPoly p(ring);
  std::vector<int> exps(ring.arity(), 0);
  exps[ring.var_index(name)] = power;
  p.add_term(exps, 1);
  return p;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [exps, c] : terms_) {
    int t = 0;
    for (int e : exps) t += e;
    d = std::max(d, t);
  }
  return d;
}

void MultiPoly::add_term(const std::vector<int>& exps, const Rational& c) {
  if (c == 0) return;
  if (static_cast<int>(exps.size()) != ring_->arity())
    throw std::invalid_argument("exponent vector has wrong length");
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p(*ring_);
  for (const auto& [exps, c] : terms_) p.terms_.emplace(exps, -c);
  return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly p = *this;
  for (const auto& [exps, c] : o.terms_) p.add_term(exps, c);
  return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly p = *this;
  for (const auto& [exps, c] : o.terms_) p.add_term(exps, -c);
  return p;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly p(*ring_);
  std::vector<int> exps(ring_->arity());
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < ring_->arity(); ++i) exps[i] = ea[i] + eb[i];
      p.add_term(exps, ca * cb);
    }
  return p;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  MultiPoly p(*ring_);
  if (c == 0) return p;
  for (const auto& [exps, coef] : terms_) p.terms_.emplace(exps, coef * c);
  return p;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  MultiPoly acc = constant(*ring_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return terms_ == o.terms_;
}

double MultiPoly::evaluate(const std::vector<double>& values) const {
  if (static_cast<int>(values.size()) != ring_->arity())
    throw std::invalid_argument("wrong number of values");
  double acc = 0;
  for (const auto& [exps, c] : terms_) {
    double t = c.get_d();
    for (int i = 0; i < ring_->arity(); ++i)
      for (int k = 0; k < exps[i]; ++k) t *= values[i];
    acc += t;
  }
  return acc;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (int i = 0; i < ring_->arity(); ++i) {
      if (exps[i] == 0) continue;
      os << "*" << ring_->var_name(i);
      if (exps[i] > 1) os << "^" << exps[i];
    }
  }
  return os.str();
}

SquareRelationIdeal::SquareRelationIdeal(
    const PolyRing& ring, std::vector<std::string> base_vars,
    std::map<std::string, MultiPoly> aux_squares)
    : ring_(&ring) {
  for (const auto& name : base_vars) base_.push_back(ring.var_index(name));
  for (const auto& [name, rhs] : aux_squares) {
    int v = ring.var_index(name);
    for (int b : base_)
      if (b == v)
        throw std::invalid_argument("variable " + name + " is base and aux");
    if (!square_of_.emplace(v, rhs).second)
      throw std::invalid_argument("aux variable " + name + " repeated");
    for (const auto& [exps, c] : rhs.terms()) {
      for (int i = 0; i < ring.arity(); ++i) {
        if (exps[i] == 0) continue;
        bool base_ok = false;
        for (int b : base_) base_ok |= (b == i);
        if (!base_ok)
          throw std::invalid_argument("square of " + name +
                                      " involves non-base variable " +
                                      ring.var_name(i));
      }
    }
  }
}

bool SquareRelationIdeal::is_base(int var) const {
  for (int b : base_)
    if (b == var) return true;
  return false;
}

MultiPoly SquareRelationIdeal::reduce(const MultiPoly& p) const {
  if (!(p.ring() == *ring_))
    throw std::invalid_argument("polynomial from a different ring");
  for (const auto& [exps, c] : p.terms())
    for (int i = 0; i < ring_->arity(); ++i)
      if (exps[i] != 0 && !is_base(i) && !is_aux(i))
        throw std::invalid_argument("unknown variable " + ring_->var_name(i));

  MultiPoly normal(*ring_);
  std::vector<std::pair<std::vector<int>, Rational>> work(p.terms().begin(),
                                                          p.terms().end());
  while (!work.empty()) {
    auto [exps, c] = work.back();
    work.pop_back();
    int aux = -1;
    for (const auto& [v, rhs] : square_of_)
      if (exps[v] >= 2) {
        aux = v;
        break;
      }
    if (aux < 0) {
      normal.add_term(exps, c);
      continue;
    }
    int q = exps[aux] / 2;
    std::vector<int> rest = exps;
    rest[aux] %= 2;
    MultiPoly replaced(*ring_);
    replaced.add_term(rest, c);
    replaced = replaced * square_of_.at(aux).pow(q);
    for (const auto& [e2, c2] : replaced.terms()) work.emplace_back(e2, c2);
  }
  return normal;
}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw std::invalid_argument("rational function with zero denominator");
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-num_, den_);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.num_.is_zero()) throw std::invalid_argument("division by zero");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return RationalFunction(den_, num_).pow(-e);
  return RationalFunction(num_.pow(e), den_.pow(e));
}

}  // namespace qhc
