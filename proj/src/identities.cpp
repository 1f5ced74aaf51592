#include "qhc/identities.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace qhc {

VerificationReport run_suite(const IdentitySuite& suite) {
  VerificationReport report;
  report.subject = suite.name;
  report.exact = true;
  for (const auto& expr : suite.expressions) {
    for (const auto& [factor, e] : expr.den_factors)
      if (suite.ideal->reduce(factor).is_zero())
        throw std::domain_error(suite.name + "/" + expr.name +
                                ": denominator reduces to zero");
    MultiPoly num = suite.ideal->reduce(expr.num);
    bool zero = num.is_zero();
    report.entries.push_back(
        {expr.name, zero ? 0.0 : static_cast<double>(num.terms().size()),
         zero});
  }
  return report;
}

namespace {

// Fraction that stays reduced modulo the suite's ideal after every
// operation and keeps its denominator as a multiset of factors; summing
// over a common factored denominator keeps term counts bounded.
class RF {
 public:
  using Factors = std::vector<std::pair<MultiPoly, int>>;

  RF(const SquareRelationIdeal& ideal, const MultiPoly& num)
      : ideal_(&ideal), num_(ideal.reduce(num)) {}

  const MultiPoly& num() const { return num_; }
  const Factors& den_factors() const { return den_; }

  RF operator-() const {
    RF out = *this;
    out.num_ = -out.num_;
    return out;
  }
  RF operator+(const RF& o) const { return combined(o, 1); }
  RF operator-(const RF& o) const { return combined(o, -1); }
  RF operator*(const RF& o) const {
    RF out = *this;
    out.num_ = ideal_->reduce(num_ * o.num_);
    for (const auto& [factor, e] : o.den_) out.push_factor(factor, e);
    return out;
  }
  RF operator/(const RF& o) const {
    MultiPoly onum = ideal_->reduce(o.num_);
    if (onum.is_zero())
      throw std::domain_error("division by zero in identity suite");
    RF out = *this;
    for (const auto& [factor, e] : o.den_)
      out.num_ = ideal_->reduce(out.num_ * factor.pow(e));
    out.push_factor(onum, 1);
    return out;
  }
  RF square() const { return *this * *this; }

 private:
  void push_factor(const MultiPoly& factor, int count) {
    for (auto& [existing, e] : den_)
      if (existing == factor) {
        e += count;
        return;
      }
    den_.emplace_back(factor, count);
  }

  int factor_power(const MultiPoly& factor) const {
    for (const auto& [existing, e] : den_)
      if (existing == factor) return e;
    return 0;
  }

  RF combined(const RF& o, int sign) const {
    // Common denominator: per-factor maximum of the two multiplicities.
    RF out = *this;
    for (const auto& [factor, e] : o.den_) {
      int have = out.factor_power(factor);
      if (e > have) out.push_factor(factor, e - have);
    }
    MultiPoly left = num_;
    MultiPoly right = o.num_;
    for (const auto& [factor, e] : out.den_) {
      int more = e - factor_power(factor);
      if (more > 0) left = ideal_->reduce(left * factor.pow(more));
      int more_o = e - o.factor_power(factor);
      if (more_o > 0) right = ideal_->reduce(right * factor.pow(more_o));
    }
    out.num_ = sign > 0 ? left + right : left - right;
    return out;
  }

  const SquareRelationIdeal* ideal_;
  MultiPoly num_;
  Factors den_;
};

struct SuiteBuilder {
  std::shared_ptr<PolyRing> ring;
  std::shared_ptr<SquareRelationIdeal> ideal;

  SuiteBuilder(std::vector<std::string> vars,
               std::vector<std::string> base_vars,
               std::vector<std::pair<std::string,
                                     std::function<MultiPoly(SuiteBuilder&)>>>
                   aux) {
    ring = std::make_shared<PolyRing>(std::move(vars));
    std::map<std::string, MultiPoly> squares;
    for (auto& [name, make] : aux) squares.emplace(name, make(*this));
    ideal = std::make_shared<SquareRelationIdeal>(*ring, std::move(base_vars),
                                                  std::move(squares));
  }

  MultiPoly v(const std::string& name) const {
    return MultiPoly::variable(*ring, name);
  }
  MultiPoly c(long value) const {
    return MultiPoly::constant(*ring, Rational(value));
  }
  RF rf(const MultiPoly& p) const { return RF(*ideal, p); }
  RF rv(const std::string& name) const { return rf(v(name)); }
  RF rc(long value) const { return rf(c(value)); }
};

void add(IdentitySuite& suite, const std::string& name, const RF& expr) {
  suite.expressions.push_back({name, expr.num(), expr.den_factors()});
}

}  // namespace

IdentitySuite kappa_identity_suite() {
  // Base m, p, n; auxiliary square roots rm = sqrt(m), rp = sqrt(p),
  // rmp1 = sqrt(m+1), rmmp = sqrt(m-p), rmmpp1 = sqrt(m-p+1).
  SuiteBuilder b(
      {"m", "p", "n", "rm", "rp", "rmp1", "rmmp", "rmmpp1"}, {"m", "p", "n"},
      {{"rm", [](SuiteBuilder& s) { return s.v("m"); }},
       {"rp", [](SuiteBuilder& s) { return s.v("p"); }},
       {"rmp1", [](SuiteBuilder& s) { return s.v("m") + s.c(1); }},
       {"rmmp", [](SuiteBuilder& s) { return s.v("m") - s.v("p"); }},
       {"rmmpp1",
        [](SuiteBuilder& s) { return s.v("m") - s.v("p") + s.c(1); }}});
  IdentitySuite suite{"kappa-identities", b.ring, b.ideal, {}};

  RF m = b.rv("m"), p = b.rv("p"), n = b.rv("n");
  RF k0 = b.rv("rm") * b.rv("rp") * b.rv("rmmp");
  RF k1 = b.rv("rm") * b.rv("rmp1");
  RF k0p = b.rv("rmp1") * b.rv("rp") * b.rv("rmmpp1");
  RF k1p = b.rv("rmmp") * b.rv("rmmpp1");
  RF one = b.rc(1), two = b.rc(2);
  RF n0 = n * (n + one);
  RF ksq = k0.square() + k1.square();
  RF pp1 = p * (p + one);

  add(suite, "kappa0^2 + kappa1^2 is an s0-invariant",
      k0.square() + k1.square() - k0p.square() - k1p.square());
  add(suite, "degree-4 relation in kappa0, kappa1",
      k0.square().square() + p.square() * k1.square().square() -
          p.square() * pp1 * k1.square() - pp1 * k0.square() -
          two * p * k0.square() * k1.square());
  add(suite, "primed pair squared: k0'^2 (k0^2+p^2 k1^2) = p^2 k1^2 kappa^2",
      k0p.square() * (k0.square() + p.square() * k1.square()) -
          p.square() * k1.square() * ksq);
  add(suite, "primed pair squared: k1'^2 (k0^2+p^2 k1^2) = k0^2 kappa^2",
      k1p.square() * (k0.square() + p.square() * k1.square()) -
          k0.square() * ksq);
  add(suite, "primed pair squared: k0^2 (k0'^2+p^2 k1'^2) = p^2 k1'^2 kappa^2",
      k0.square() * (k0p.square() + p.square() * k1p.square()) -
          p.square() * k1p.square() * (k0p.square() + k1p.square()));
  add(suite, "primed pair squared: k1^2 (k0'^2+p^2 k1'^2) = k0'^2 kappa^2",
      k1.square() * (k0p.square() + p.square() * k1p.square()) -
          k0p.square() * (k0p.square() + k1p.square()));
  {
    RF zminus = (k0 - k0p).square() + (k1 - k1p).square();
    RF zplus = (k0 - k0p).square() + (k1 + k1p).square();
    add(suite, "p(p+1) as the minus-pair ratio",
        pp1 * zplus - (k1 + k1p).square() * zminus);
  }
  {
    RF wminus = (k0 + k0p).square() + (k1 - k1p).square();
    RF wplus = (k0 + k0p).square() + (k1 + k1p).square();
    RF lhs = pp1 + b.rc(4) * (m + one) * (m - p) * p / (one + p);
    add(suite, "shifted constant as the plus-pair ratio",
        lhs * wplus - (k1 + k1p).square() * wminus);
  }
  RF c2 = k0 * k1 / (k0.square() + p * k1.square()) *
          (n0 * (p - one) / ksq + one);
  RF c3 = k0p * k1p / (k0p.square() + p * k1p.square()) *
          (n0 * (p - one) / ksq + one);
  RF c1 = (two * (n0 / ksq) * (ksq - k1.square() - k1p.square()) +
           (k1.square() + k1p.square() - pp1)) /
          (two * (k0 * k1 + k0p * k1p));
  add(suite, "constant c: averaged form = unprimed form", c1 - c2);
  add(suite, "constant c: unprimed form = primed form", c2 - c3);
  {
    RF zsq = (k0 - k0p).square() + (k1 + k1p).square();
    RF f_direct = -(k0.square() + p.square() * k1.square()) *
                  (n0 - k1.square()) * (n0 - k1p.square()) /
                  ((k0.square() + p * k1.square()).square() * zsq);
    RF f_c = (n0 - n0 * n0 / ksq - c2.square() * ksq) / zsq;
    add(suite, "f-condition via c equals the direct form", f_direct - f_c);
  }
  return suite;
}

IdentitySuite pair_ratio_suite() {
  // Dictionary: m stands for sqrt(m); p is plain.
  SuiteBuilder b(
      {"m", "p", "mmp", "mp1", "mmpp1", "mmpm1"}, {"m", "p"},
      {{"mmp", [](SuiteBuilder& s) { return s.v("m").pow(2) - s.v("p"); }},
       {"mp1", [](SuiteBuilder& s) { return s.v("m").pow(2) + s.c(1); }},
       {"mmpp1",
        [](SuiteBuilder& s) {
          return s.v("m").pow(2) + s.c(1) - s.v("p");
        }},
       {"mmpm1", [](SuiteBuilder& s) {
          return s.v("m").pow(2) - s.c(1) - s.v("p");
        }}});
  IdentitySuite suite{"pair-ratios", b.ring, b.ideal, {}};
  RF m = b.rv("m"), p = b.rv("p");
  RF one = b.rc(1), two = b.rc(2);
  RF k1k1p = m * b.rv("mp1") * b.rv("mmp") * b.rv("mmpp1");
  RF k0k0p = p * k1k1p;
  RF sumk1square = m.square() * (m.square() + one) +
                   (m.square() - p) * (m.square() - p + one);
  RF kappasquare = m.square() * (p + one) * (m.square() - p + one);
  RF q1 = (sumk1square + two * k1k1p) *
          (two * kappasquare - two * k0k0p - two * k1k1p);
  RF m1 = p * (p + one) * (two * kappasquare - two * k0k0p + two * k1k1p);
  add(suite, "F = Q1 - M1 in Ideal", q1 - m1);
  RF q2 = (sumk1square + two * k1k1p) *
          (two * kappasquare + two * k0k0p - two * k1k1p);
  RF m2 = (p * (p + one) +
           b.rc(4) * (m.square() + one) * (m.square() - p) * p / (one + p)) *
          (two * kappasquare + two * k0k0p + two * k1k1p);
  add(suite, "Numerator(G) = Numerator(Q2 - M2) in Ideal", q2 - m2);
  return suite;
}

IdentitySuite quartic_coefficient_suite() {
  // Plain polynomial ring Q[m, p]; no square relations.
  SuiteBuilder b({"m", "p"}, {"m", "p"}, {});
  IdentitySuite suite{"quartic-coefficient", b.ring, b.ideal, {}};
  RF m = b.rv("m"), p = b.rv("p");
  RF one = b.rc(1), two = b.rc(2);
  RF k0 = m * p * (m - p);
  RF k1 = m * (m + one);
  RF k = k0 + k1;
  RF k3 = k0 + p * k1;
  RF x = (k - two * k1 - two * k0 * k1 * (p - one) / k3).square() -
         p * (p + one) * k -
         p * (p + one) * k * k0 * k1 * (p - one).square() / k3.square();
  add(suite, "Numerator(x) = 0", x);
  return suite;
}

namespace {

struct PathDictionary {
  std::string name;
  // Monomial spellings from the listing; "N" denotes n*np1.
  std::string k0, k1, k2, k0p, k1p, k0pp, k2pp;
};

}  // namespace

IdentitySuite braid_coefficient_suite() {
  // Dictionary: every variable is a square root (m = sqrt(m),
  // p = sqrt(p), ...).
  SuiteBuilder b(
      {"m", "p", "mmp", "mp1", "n", "np1", "mmpp1", "mmpm1", "mm1"},
      {"m", "p", "n"},
      {{"mm1", [](SuiteBuilder& s) { return s.v("m").pow(2) - s.c(1); }},
       {"mmpm1",
        [](SuiteBuilder& s) {
          return s.v("m").pow(2) - s.c(1) - s.v("p").pow(2);
        }},
       {"mp1", [](SuiteBuilder& s) { return s.v("m").pow(2) + s.c(1); }},
       {"np1", [](SuiteBuilder& s) { return s.v("n").pow(2) + s.c(1); }},
       {"mmpp1",
        [](SuiteBuilder& s) {
          return s.v("m").pow(2) + s.c(1) - s.v("p").pow(2);
        }},
       {"mmp", [](SuiteBuilder& s) {
          return s.v("m").pow(2) - s.v("p").pow(2);
        }}});
  IdentitySuite suite{"braid-coefficients", b.ring, b.ideal, {}};

  auto mono = [&](const std::string& spec) -> RF {
    // product of variable names separated by '*'
    MultiPoly acc = MultiPoly::constant(*b.ring, 1);
    std::string token;
    for (char ch : spec + "*") {
      if (ch == '*') {
        if (token == "N")
          acc = acc * b.v("n") * b.v("np1");
        else
          acc = acc * b.v(token);
        token.clear();
      } else {
        token += ch;
      }
    }
    return b.rf(acc);
  };

  std::vector<PathDictionary> paths = {
      {"caseA-1", "m*p*mmp", "N", "m*mp1", "m*p*mmp", "N", "mp1*p*mmpp1",
       "mmp*mmpp1"},
      {"caseA-2", "m*p*mmp", "m*mp1", "N", "mp1*p*mmpp1", "mmp*mmpp1", "m*p*mmp",
       "N"},
      {"caseA-3", "mp1*p*mmpp1", "mmp*mmpp1", "N", "m*p*mmp", "m*mp1",
       "mp1*p*mmpp1", "N"},
      {"caseA-4", "mp1*p*mmpp1", "N", "mmp*mmpp1", "mp1*p*mmpp1", "N", "m*p*mmp",
       "m*mp1"},
      {"caseB-2", "m*p*mmp", "mmpm1*mmp", "m*mp1", "mm1*p*mmpm1", "m*mm1",
       "mp1*p*mmpp1", "mmp*mmpp1"},
      {"caseB-3", "m*p*mmp", "m*mp1", "mmp*mmpm1", "mp1*p*mmpp1", "mmpp1*mmp",
       "mm1*p*mmpm1", "m*mm1"}};

  RF one = b.rc(1);
  RF p = b.rv("p");
  RF nbig = mono("N");

  for (const PathDictionary& pd : paths) {
    RF k0 = mono(pd.k0), k1 = mono(pd.k1), k2 = mono(pd.k2);
    RF k0p = mono(pd.k0p), k1p = mono(pd.k1p);
    RF k0pp = mono(pd.k0pp), k2pp = mono(pd.k2pp);
    RF nsq = nbig.square();
    RF psq = p.square();

    RF alpha = -(one / (k1 - k2)), beta = one / (k1 + k2);
    RF alpha1 = -(one / (k2 - k1)), beta1 = one / (k1 + k2);
    RF alpha2 = -(one / (k2pp - k1)), beta2 = one / (k2pp + k1);
    RF alphap = -(one / (k1p - k2)), betap = one / (k1p + k2);
    RF abig = k0 - k0p, bbig = k1 + k1p;
    RF fbig = k0 - k0pp, gbig = k2 + k2pp;
    RF delta = (-nsq + k1.square()) * k0 / (k0.square() + psq * k1.square());
    RF delta1 = (-nsq + k2.square()) * k0 / (k0.square() + psq * k2.square());
    RF gamma =
        (nsq * psq + k0.square()) * k1 / (k0.square() + psq * k1.square());
    RF gamma1 =
        (nsq * psq + k0.square()) * k2 / (k0.square() + psq * k2.square());
    RF mbig = -(k0.square() + psq * psq * k2.square()) *
              (nsq - k2.square()) * (nsq - k2pp.square()) /
              ((k0.square() + psq * k2.square()).square() *
               ((k0 - k0pp).square() + (k2 + k2pp).square()));
    RF kbig = -(k0.square() + psq * psq * k1.square()) *
              (nsq - k1.square()) * (nsq - k1p.square()) /
              ((k0.square() + psq * k1.square()).square() *
               ((k0 - k0p).square() + (k1 + k1p).square()));

    RF c0 = -beta * gamma * gamma1 - alpha * delta * delta1 -
            delta1.square() * alpha1 - gamma1.square() * beta1 -
            gamma.square() * beta - delta.square() * alpha -
            delta * delta1 * alpha1 - gamma * gamma1 * beta1 +
            mbig * (-(fbig.square() * beta2) - gbig.square() * alpha2) -
            kbig * (abig.square() * betap + bbig.square() * alphap) +
            gamma1 + gamma;
    RF c1 = mbig * (gbig * fbig * alpha2 - fbig * gbig * beta2) -
            kbig * (-(abig * bbig * betap) + bbig * abig * alphap) +
            alpha * delta * gamma1 - gamma * beta * delta1 +
            delta1 * alpha1 * gamma1 - gamma1 * beta1 * delta1 +
            delta * beta * gamma - gamma * alpha * delta -
            gamma * delta1 * alpha1 + delta * gamma1 * beta1 + delta1 -
            delta;
    RF c2 = mbig * (-(gbig * fbig * beta2) + gbig * fbig * alpha2) -
            kbig * (bbig * abig * alphap - abig * bbig * betap) +
            beta * delta * gamma1 + alpha * gamma * delta1 -
            delta1 * beta1 * gamma1 + gamma1 * alpha1 * delta1 -
            delta * alpha * gamma + gamma * beta * delta -
            delta * gamma1 * alpha1 - gamma * delta1 * beta1 + delta1 -
            delta;
    RF w3 = mbig * (fbig.square() * alpha2 + gbig.square() * beta2) -
            kbig * (abig.square() * alphap + bbig.square() * betap) +
            alpha * gamma * gamma1 - beta * delta * delta1 +
            gamma1.square() * alpha1 + delta1.square() * beta1 -
            gamma.square() * alpha - delta.square() * beta -
            gamma * gamma1 * alpha1 + delta * delta1 * beta1 + gamma1 -
            gamma;

    add(suite, pd.name + ": coefficient on c1c2", c0);
    add(suite, pd.name + ": coefficient on c0c2", c1);
    add(suite, pd.name + ": coefficient on c0c1", c2);
    add(suite, pd.name + ": scalar coefficient", w3);
  }
  return suite;
}

IdentitySuite classification_coefficient_suite() {
  // Dictionary: m = sqrt(m), p = sqrt(p).
  SuiteBuilder b(
      {"m", "p", "mmp", "mp1", "mmpp1"}, {"m", "p"},
      {{"mp1", [](SuiteBuilder& s) { return s.v("m").pow(2) + s.c(1); }},
       {"mmpp1",
        [](SuiteBuilder& s) {
          return s.v("m").pow(2) + s.c(1) - s.v("p").pow(2);
        }},
       {"mmp", [](SuiteBuilder& s) {
          return s.v("m").pow(2) - s.v("p").pow(2);
        }}});
  IdentitySuite suite{"classification-coefficients", b.ring, b.ideal, {}};
  RF m = b.rv("m"), p = b.rv("p");
  RF one = b.rc(1), two = b.rc(2), four = b.rc(4);
  RF k0 = m * p * b.rv("mmp");
  RF k1 = m * b.rv("mp1");
  RF k0p = b.rv("mp1") * p * b.rv("mmpp1");
  RF k1p = b.rv("mmp") * b.rv("mmpp1");
  RF ksquare = m.square() * (p.square() + one) * b.rv("mmpp1").square();
  RF k1sum = m.square() * (m.square() + one) +
             b.rv("mmp").square() * b.rv("mmpp1").square();
  RF denom = k0 * k1 - k0p * k1p;
  RF psq = p.square();
  RF pp1 = psq * (psq + one);

  RF a1 = -pp1 +
          two * k0 * k1 *
              (two * k1.square() / ksquare +
               two * k0 * k1 * (ksquare - k1sum) / ksquare / denom) *
              (k1sum - pp1) / denom +
          (one - (ksquare - k1sum) / denom * (k1sum - pp1) / denom) *
              (pp1 + four * (m.square() + one) * (m.square() - psq) * psq /
                         (one + psq)) +
          two * k1.square() - two * k0 * k1 * (k1sum - pp1) / denom -
          (-pp1 + two * k1.square()) *
              (two * k1.square() / ksquare +
               two * k0 * k1 / ksquare * (ksquare - k1sum) / denom);
  add(suite, "a1 = 0", a1);

  RF a2 = one +
          (two * k1.square() / ksquare +
           two * k0 * k1 * (ksquare - k1sum) / denom / ksquare)
              .square() -
          one / ksquare *
              (pp1 + four * (m.square() + one) * (m.square() - psq) * psq /
                         (psq + one)) -
          two * (two * k1.square() / ksquare +
                 two * k0 * k1 * (ksquare - k1sum) / denom / ksquare);
  RF b2 = (two * m.square() - psq + one).square() * (m.square() - psq) *
          (m.square() + one) /
          ((psq + one).square() * (m.square() + one - psq) * m.square());
  add(suite, "a2 = printed closed form", a2 - b2);

  RF a0 = k1.square().square() +
          (two * k0 * k1 * (k1sum - pp1) / (two * denom)).square() -
          ksquare * ((k1sum - pp1) / (two * denom)).square() *
              (pp1 + four * (m.square() + one) * (m.square() - psq) * psq /
                         (psq + one)) -
          pp1 * k1.square() -
          (-pp1 + two * k1.square()) *
              (two * k0 * k1 * (k1sum - pp1) / (two * denom));
  RF b0 = -four * psq.square() * m.square() * (m.square() + one) *
          (m.square() - psq) * (m.square() - psq + one) /
          (psq - one).square();
  add(suite, "a0 = printed closed form", a0 - b0);
  return suite;
}

std::vector<IdentitySuite> all_identity_suites() {
  std::vector<IdentitySuite> suites;
  suites.push_back(kappa_identity_suite());
  suites.push_back(pair_ratio_suite());
  suites.push_back(quartic_coefficient_suite());
  suites.push_back(braid_coefficient_suite());
  suites.push_back(classification_coefficient_suite());
  return suites;
}

}  // namespace qhc
