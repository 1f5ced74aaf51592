#include "qhc/calibrated.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <stdexcept>

namespace qhc {

std::int64_t kappa_sq(const PathTableau& t, int i) {
  if (i == 0) {
    std::int64_t m = t.first_row_length();
    std::int64_t p = t.graph().p();
    return m * p * (m - p);
  }
  std::int64_t c = t.content_of(i);
  return c * (c + 1);
}

double kappa(const PathTableau& t, int i) {
  return std::sqrt(static_cast<double>(kappa_sq(t, i)));
}

namespace {

struct KappaPair {
  double k0, k1, k0p, k1p;
  std::int64_t k0sq, k1sq, k0psq, k1psq;
  double n0;
};

KappaPair kappa_pair(const PathTableau& t) {
  PathOrStar s = s_action(0, t);
  if (!s) throw std::domain_error("f_rhs: s_0.T = star");
  KappaPair k;
  k.k0sq = kappa_sq(t, 0);
  k.k1sq = kappa_sq(t, 1);
  k.k0psq = kappa_sq(*s, 0);
  k.k1psq = kappa_sq(*s, 1);
  k.k0 = std::sqrt(static_cast<double>(k.k0sq));
  k.k1 = std::sqrt(static_cast<double>(k.k1sq));
  k.k0p = std::sqrt(static_cast<double>(k.k0psq));
  k.k1p = std::sqrt(static_cast<double>(k.k1psq));
  double n = t.graph().n();
  k.n0 = n * (n + 1);
  return k;
}

}  // namespace

double f_rhs(const PathTableau& t) {
  KappaPair k = kappa_pair(t);
  double p = t.graph().p();
  double zsq = (k.k0 - k.k0p) * (k.k0 - k.k0p) +
               (k.k1 + k.k1p) * (k.k1 + k.k1p);
  double num = (k.k0sq + p * p * k.k1sq) * (k.n0 - k.k1sq) *
               (k.n0 - k.k1psq);
  double den = (k.k0sq + p * k.k1sq) * (k.k0sq + p * k.k1sq) * zsq;
  return -num / den;
}

double f_rhs_via_c(const PathTableau& t) {
  KappaPair k = kappa_pair(t);
  double p = t.graph().p();
  double ksq = k.k0sq + k.k1sq;
  double c = k.k0 * k.k1 / (k.k0sq + p * k.k1sq) *
             (k.n0 * (p - 1) / ksq + 1);
  double zsq = (k.k0 - k.k0p) * (k.k0 - k.k0p) +
               (k.k1 + k.k1p) * (k.k1 + k.k1p);
  return (k.n0 - k.n0 * k.n0 / ksq - c * c * ksq) / zsq;
}

FAssignment default_f(const BratteliGraph& g, const StrictPartition& lambda) {
  std::vector<PathTableau> paths = paths_to(g, lambda);
  FAssignment f;
  f.value.assign(paths.size(), Complex{0, 0});
  for (std::size_t t = 0; t < paths.size(); ++t) {
    if (!s_action(0, paths[t])) continue;
    double ft = f_rhs(paths[t]);
    f.value[t] = ft >= 0 ? Complex{std::sqrt(ft), 0}
                         : Complex{0, std::sqrt(-ft)};
  }
  return f;
}

std::vector<std::int64_t> ModuleRep::label_of(Eigen::Index b) const {
  int t = path_of(b);
  CliffordMask mask = mask_of(b);
  std::vector<std::int64_t> label(d + 1);
  for (int i = 0; i <= d; ++i)
    label[i] = (mask & (CliffordMask{1} << i)) ? -kappa_sq[t][i]
                                               : kappa_sq[t][i];
  return label;
}

const ComplexMatrix& ModuleRep::generator(const std::string& name) const {
  auto it = gen.find(name);
  if (it == gen.end())
    throw std::invalid_argument("module has no generator " + name);
  return it->second;
}

std::vector<std::string> ModuleRep::generator_names() const {
  std::vector<std::string> names;
  for (const auto& [name, m] : gen) names.push_back(name);
  return names;
}

nlohmann::json ModuleRep::to_json() const {
  nlohmann::json basis = nlohmann::json::array();
  for (Eigen::Index b = 0; b < dim; ++b)
    basis.push_back({{"path", path_of(b)},
                     {"clifford", static_cast<unsigned>(mask_of(b))}});
  nlohmann::json paths_json = nlohmann::json::array();
  for (const PathTableau& t : paths) {
    nlohmann::json chain = nlohmann::json::array();
    for (int r = -1; r <= d; ++r) chain.push_back(t.partition_at(r).parts());
    paths_json.push_back(chain);
  }
  nlohmann::json gens;
  for (const auto& [name, m] : gen) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        row.push_back({m(i, j).real(), m(i, j).imag()});
      rows.push_back(row);
    }
    gens[name] = rows;
  }
  return {{"variant", variant == ModuleVariant::EvenD ? "D" : "E"},
          {"n", n},
          {"p", p},
          {"d", d},
          {"lambda", lambda.parts()},
          {"dim", dim},
          {"paths", paths_json},
          {"basis", basis},
          {"parity", parity},
          {"generators", gens}};
}

ModuleRep build_module(const BratteliGraph& g, const StrictPartition& lambda,
                       ModuleVariant variant, const FAssignment& f) {
  const int d = g.depth();
  if (d < 1)
    throw std::invalid_argument(
        "build_module: d >= 1 required (x_1, z_1 need a tensor copy of V)");
  if (g.find_vertex(d, lambda) < 0)
    throw std::invalid_argument("lambda is not a row-d vertex");

  ModuleRep rep;
  rep.variant = variant;
  rep.n = g.n();
  rep.p = g.p();
  rep.d = d;
  rep.lambda = lambda;
  rep.paths = paths_to(g, lambda);
  const int npaths = static_cast<int>(rep.paths.size());
  const bool with_cm = variant == ModuleVariant::OddE;
  rep.order = CliffordOrder::module_order(d, with_cm);
  rep.cliff_bits = d + 1 + (with_cm ? 1 : 0);
  rep.dim = static_cast<Eigen::Index>(npaths) << rep.cliff_bits;

  rep.kappa_sq.resize(npaths);
  rep.kappa.resize(npaths);
  rep.s0_partner.assign(npaths, -1);
  for (int t = 0; t < npaths; ++t) {
    rep.kappa_sq[t].resize(d + 1);
    rep.kappa[t].resize(d + 1);
    for (int i = 0; i <= d; ++i) {
      rep.kappa_sq[t][i] = kappa_sq(rep.paths[t], i);
      rep.kappa[t][i] = std::sqrt(static_cast<double>(rep.kappa_sq[t][i]));
    }
    PathOrStar s = s_action(0, rep.paths[t]);
    if (s) {
      for (int u = 0; u < npaths; ++u)
        if (rep.paths[u] == *s) rep.s0_partner[t] = u;
      if (rep.s0_partner[t] < 0)
        throw std::logic_error("s_0 partner missing from the path list");
      if (f.at(t) == Complex{0, 0})
        throw std::invalid_argument("missing f value for a path with s_0.T "
                                    "!= star");
    }
  }

  rep.parity.resize(rep.dim);
  for (Eigen::Index b = 0; b < rep.dim; ++b) {
    int t = rep.path_of(b);
    rep.parity[b] = (rep.paths[t].first_row_length() +
                     __builtin_popcount(rep.mask_of(b))) &
                    1;
  }

  const CliffordMask all = (CliffordMask{1} << rep.cliff_bits) - 1;
  (void)all;

  // z_i: diagonal with entries (-1)^{eps_i} kappa_T(i).
  for (int i = 0; i <= d; ++i) {
    ComplexMatrix z = ComplexMatrix::Zero(rep.dim, rep.dim);
    for (Eigen::Index b = 0; b < rep.dim; ++b) {
      int t = rep.path_of(b);
      double sign = (rep.mask_of(b) & (CliffordMask{1} << i)) ? -1.0 : 1.0;
      z(b, b) = sign * rep.kappa[t][i];
    }
    rep.gen["z" + std::to_string(i)] = std::move(z);
  }

  // Clifford generators: signed bit toggles.
  auto clifford_generator = [&](int j) {
    ComplexMatrix c = ComplexMatrix::Zero(rep.dim, rep.dim);
    for (Eigen::Index b = 0; b < rep.dim; ++b) {
      auto [sign, mask] = mul_left(j, rep.mask_of(b), rep.order);
      c(rep.index(rep.path_of(b), mask), b) = sign;
    }
    return c;
  };
  for (int j = 0; j <= d; ++j)
    rep.gen["c" + std::to_string(j)] = clifford_generator(j);
  if (with_cm) rep.gen["cM"] = clifford_generator(d + 1);

  // s_i: seminormal form on paths, Clifford bits i and i+1 swapped first.
  for (int i = 1; i <= d - 1; ++i) {
    ComplexMatrix s = ComplexMatrix::Zero(rep.dim, rep.dim);
    for (int t = 0; t < npaths; ++t) {
      double ki = rep.kappa[t][i];
      double kj = rep.kappa[t][i + 1];
      double alpha = -1.0 / (ki - kj);
      double beta = 1.0 / (ki + kj);
      PathOrStar st = s_action(i, rep.paths[t]);
      int tp = -1;
      double e = 0;
      if (st) {
        for (int u = 0; u < npaths; ++u)
          if (rep.paths[u] == *st) tp = u;
        e = std::sqrt(1.0 - beta * beta - alpha * alpha);
      }
      for (CliffordMask mask = 0; mask <= all; ++mask) {
        Eigen::Index b = rep.index(t, mask);
        // s_i c^mask = swap_sign * c^(mask with bits i, i+1 swapped) s_i;
        // when both bits are set the pair reverses order, giving the sign.
        CliffordMask swapped = mask;
        CliffordMask bi = (mask >> i) & 1, bj = (mask >> (i + 1)) & 1;
        double swap_sign = 1.0;
        if (bi != bj)
          swapped ^= (CliffordMask{1} << i) | (CliffordMask{1} << (i + 1));
        else if (bi == 1)
          swap_sign = -1.0;
        s(rep.index(t, swapped), b) += swap_sign * alpha;
        auto [s1, m1] = mul_right(swapped, i, rep.order);
        auto [s2, m2] = mul_right(m1, i + 1, rep.order);
        s(rep.index(t, m2), b) += swap_sign * beta * s1 * s2;
        if (tp >= 0) s(rep.index(tp, swapped), b) += swap_sign * e;
      }
    }
    rep.gen["s" + std::to_string(i)] = std::move(s);
  }

  // x_1: block structure of (Cal_2_x1acts); anticommutes with c_1 only.
  {
    const double n0 = static_cast<double>(rep.n) * (rep.n + 1);
    const double p = rep.p;
    ComplexMatrix x = ComplexMatrix::Zero(rep.dim, rep.dim);
    for (int t = 0; t < npaths; ++t) {
      double k0 = rep.kappa[t][0];
      double k1 = rep.kappa[t][1];
      double k0sq = static_cast<double>(rep.kappa_sq[t][0]);
      double k1sq = static_cast<double>(rep.kappa_sq[t][1]);
      double gamma = (n0 * p + k0sq) * k1 / (k0sq + p * k1sq);
      double delta = (k1sq - n0) * k0 / (k0sq + p * k1sq);
      int tp = rep.s0_partner[t];
      double a = 0, bcoef = 0;
      Complex ft{0, 0};
      if (tp >= 0) {
        ft = f.at(t);
        a = k0 - rep.kappa[tp][0];       // kappa_0 - kappa_0'
        bcoef = k1 + rep.kappa[tp][1];   // kappa_1 + kappa_1'
      }
      for (CliffordMask mask = 0; mask <= all; ++mask) {
        Eigen::Index b = rep.index(t, mask);
        double sign = (mask & (CliffordMask{1} << 1)) ? -1.0 : 1.0;
        x(b, b) += sign * gamma;
        auto [s0c0, m0] = mul_right(mask, 0, rep.order);
        auto [s01, m01] = mul_right(m0, 1, rep.order);
        x(rep.index(t, m01), b) += sign * delta * s0c0 * s01;
        if (tp >= 0) {
          x(rep.index(tp, m0), b) += sign * ft * a * static_cast<double>(s0c0);
          auto [s1c1, m1] = mul_right(mask, 1, rep.order);
          x(rep.index(tp, m1), b) +=
              sign * ft * bcoef * static_cast<double>(s1c1);
        }
      }
    }
    rep.gen["x1"] = std::move(x);
  }

  return rep;
}

}  // namespace qhc
