#include "qhc/qn.hpp"

#include "qhc/tableaux.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace qhc {

QnAlgebra::QnAlgebra(int n_) : n(n_) {
  if (n < 1) throw std::invalid_argument("q(n) needs n >= 1");
}

RationalMatrix QnAlgebra::e(int i, int j) const {
  RationalMatrix m = RationalMatrix::Zero(2 * n, 2 * n);
  m(i - 1, j - 1) = 1;
  m(n + i - 1, n + j - 1) = 1;
  return m;
}

RationalMatrix QnAlgebra::f(int i, int j) const {
  RationalMatrix m = RationalMatrix::Zero(2 * n, 2 * n);
  m(i - 1, n + j - 1) = 1;
  m(n + i - 1, j - 1) = 1;
  return m;
}

RationalMatrix QnAlgebra::cmat() const {
  RationalMatrix m = RationalMatrix::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    m(i, n + i) = -1;
    m(n + i, i) = 1;
  }
  return m;
}

TensorFactor natural_factor(int n) {
  QnAlgebra qn(n);
  TensorFactor v;
  v.name = "V";
  v.dim = 2 * n;
  v.parity.resize(2 * n);
  for (int i = 0; i < 2 * n; ++i) v.parity[i] = i < n ? 0 : 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      v.e_act.push_back(qn.e(i, j));
      v.f_act.push_back(qn.f(i, j));
    }
  return v;
}

TensorFactor trivial_factor(int n) {
  TensorFactor t;
  t.name = "C";
  t.dim = 1;
  t.parity = {0};
  RationalMatrix zero = RationalMatrix::Zero(1, 1);
  for (int i = 0; i < n * n; ++i) {
    t.e_act.push_back(zero);
    t.f_act.push_back(zero);
  }
  return t;
}

TensorSpace::TensorSpace(int n, std::vector<TensorFactor> factors)
    : n_(n), factors_(std::move(factors)), qn_(n) {
  dim_ = 1;
  for (const TensorFactor& f : factors_) dim_ *= f.dim;
  if (dim_ > (Eigen::Index{1} << 18))
    throw std::invalid_argument(
        "tensor space dimension exceeds the 2^18 guardrail");
  stride_.assign(factors_.size(), 1);
  for (int s = static_cast<int>(factors_.size()) - 2; s >= 0; --s)
    stride_[s] = stride_[s + 1] * factors_[s + 1].dim;
}

int TensorSpace::digit(Eigen::Index basis, int slot) const {
  return static_cast<int>((basis / stride_[slot]) % factors_[slot].dim);
}

Eigen::Index TensorSpace::with_digit(Eigen::Index basis, int slot,
                                     int value) const {
  return basis + (value - digit(basis, slot)) * stride_[slot];
}

int TensorSpace::basis_parity(Eigen::Index basis) const {
  int p = 0;
  for (int s = 0; s < slots(); ++s)
    p ^= factors_[s].parity[digit(basis, s)];
  return p;
}

int TensorSpace::prefix_parity(Eigen::Index basis, int slot) const {
  int p = 0;
  for (int s = 0; s < slot; ++s)
    p ^= factors_[s].parity[digit(basis, s)];
  return p;
}

RationalMatrix TensorSpace::embed(int slot, const RationalMatrix& local,
                                  int op_parity) const {
  RationalMatrix out = RationalMatrix::Zero(dim_, dim_);
  for (Eigen::Index col = 0; col < dim_; ++col) {
    int k = digit(col, slot);
    int sign = (op_parity && prefix_parity(col, slot)) ? -1 : 1;
    for (int r = 0; r < factors_[slot].dim; ++r) {
      if (local(r, k) == 0) continue;
      out(with_digit(col, slot, r), col) += sign * local(r, k);
    }
  }
  return out;
}

RationalMatrix TensorSpace::act_e(int i, int j) const {
  RationalMatrix out = RationalMatrix::Zero(dim_, dim_);
  for (int s = 0; s < slots(); ++s)
    out += embed(s, factors_[s].e_act[(i - 1) * n_ + (j - 1)], 0);
  return out;
}

RationalMatrix TensorSpace::act_f(int i, int j) const {
  RationalMatrix out = RationalMatrix::Zero(dim_, dim_);
  for (int s = 0; s < slots(); ++s)
    out += embed(s, factors_[s].f_act[(i - 1) * n_ + (j - 1)], 1);
  return out;
}

RationalMatrix TensorSpace::omega(int a, int b) const {
  if (!(0 <= a && a < b && b < slots()))
    throw std::invalid_argument("omega placement needs slots a < b");
  RationalMatrix out = RationalMatrix::Zero(dim_, dim_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) {
      int ij = (i - 1) * n_ + (j - 1);
      int ji = (j - 1) * n_ + (i - 1);
      out += mul_sparse(embed(a, factors_[a].e_act[ij], 0),
                        embed(b, factors_[b].f_act[ji], 1));
      out -= mul_sparse(embed(a, factors_[a].f_act[ij], 1),
                        embed(b, factors_[b].e_act[ji], 0));
    }
  return out;
}

RationalMatrix TensorSpace::omega_bar(int a, int b) const {
  if (factors_[b].name != "V")
    throw std::invalid_argument("omega_bar needs a natural-module slot");
  return mul_sparse(omega(a, b), embed(b, qn_.cmat(), 1));
}

const RationalMatrix& TensorRep::generator(const std::string& name) const {
  auto it = gen.find(name);
  if (it == gen.end())
    throw std::invalid_argument("oracle rep has no generator " + name);
  return it->second;
}

namespace {

// Signed swap of adjacent V slots a, a+1.
RationalMatrix signed_swap(const TensorSpace& space, int a) {
  RationalMatrix out = RationalMatrix::Zero(space.dim(), space.dim());
  for (Eigen::Index col = 0; col < space.dim(); ++col) {
    int u = space.digit(col, a);
    int v = space.digit(col, a + 1);
    Eigen::Index row = space.with_digit(space.with_digit(col, a, v), a + 1, u);
    int sign =
        (space.factor(a).parity[u] && space.factor(a + 1).parity[v]) ? -1 : 1;
    out(row, col) = sign;
  }
  return out;
}

}  // namespace

TensorRep sergeev_rep(int n, int d) {
  if (d < 1) throw std::invalid_argument("sergeev_rep needs d >= 1");
  std::vector<TensorFactor> factors(d, natural_factor(n));
  TensorSpace space(n, std::move(factors));
  TensorRep rep{std::move(space), {}, {}};
  QnAlgebra qn(n);
  for (int i = 1; i <= d; ++i) {
    rep.gen["c" + std::to_string(i)] = rep.space.embed(i - 1, qn.cmat(), 1);
    rep.gen_parity["c" + std::to_string(i)] = 1;
  }
  for (int i = 1; i <= d - 1; ++i) {
    rep.gen["s" + std::to_string(i)] = signed_swap(rep.space, i - 1);
    rep.gen_parity["s" + std::to_string(i)] = 0;
  }
  return rep;
}

TensorRep twoboundary_rep(const TensorFactor& m, const TensorFactor& f_n,
                          int n, int d) {
  if (d < 1) throw std::invalid_argument("twoboundary_rep needs d >= 1");
  std::vector<TensorFactor> factors{m, f_n};
  for (int k = 0; k < d; ++k) factors.push_back(natural_factor(n));
  TensorSpace space(n, std::move(factors));
  TensorRep rep{std::move(space), {}, {}};
  QnAlgebra qn(n);
  for (int i = 1; i <= d; ++i) {
    rep.gen["c" + std::to_string(i)] = rep.space.embed(i + 1, qn.cmat(), 1);
    rep.gen_parity["c" + std::to_string(i)] = 1;
  }
  for (int i = 1; i <= d - 1; ++i) {
    rep.gen["s" + std::to_string(i)] = signed_swap(rep.space, i + 1);
    rep.gen_parity["s" + std::to_string(i)] = 0;
  }
  rep.gen["xt1"] = rep.space.omega(0, 2);
  rep.gen_parity["xt1"] = 1;
  rep.gen["zt0"] = rep.space.omega(0, 1);
  rep.gen_parity["zt0"] = 1;
  for (int i = 1; i <= d; ++i) {
    RationalMatrix z = rep.space.omega(0, i + 1) + rep.space.omega(1, i + 1);
    for (int j = 1; j <= i - 1; ++j) z += rep.space.omega(j + 1, i + 1);
    rep.gen["zt" + std::to_string(i)] = std::move(z);
    rep.gen_parity["zt" + std::to_string(i)] = 1;
  }
  return rep;
}

std::vector<RationalMatrix> sergeev_w_elements(const TensorRep& rep, int d) {
  std::vector<RationalMatrix> w(d + 1);
  const Eigen::Index dim = rep.space.dim();
  w[1] = RationalMatrix::Zero(dim, dim);
  for (int i = 1; i <= d - 1; ++i) {
    const RationalMatrix& s = rep.generator("s" + std::to_string(i));
    RationalMatrix cdiff = rep.generator("c" + std::to_string(i)) -
                           rep.generator("c" + std::to_string(i + 1));
    w[i + 1] = mul_sparse(mul_sparse(s, w[i]), s) - mul_sparse(cdiff, s);
  }
  return w;
}

std::vector<RationalMatrix> nazarov_x_elements(const TensorRep& rep,
                                               const RationalMatrix& x1,
                                               int d) {
  std::vector<RationalMatrix> x(d + 1);
  x[1] = x1;
  for (int i = 1; i <= d - 1; ++i) {
    const RationalMatrix& s = rep.generator("s" + std::to_string(i));
    RationalMatrix cc = mul_sparse(rep.generator("c" + std::to_string(i)),
                                   rep.generator("c" + std::to_string(i + 1)));
    x[i + 1] =
        mul_sparse(mul_sparse(s, x[i]), s) + s - mul_sparse(cc, s);
  }
  return x;
}

VerificationReport supercommutation_check(const TensorRep& rep) {
  VerificationReport report;
  report.subject = "supercommutation with q(n)";
  report.exact = true;
  const int n = rep.space.n();
  std::vector<std::pair<RationalMatrix, int>> qn_ops;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      qn_ops.emplace_back(rep.space.act_e(i, j), 0);
      qn_ops.emplace_back(rep.space.act_f(i, j), 1);
    }
  for (const auto& [name, g] : rep.gen) {
    int gp = rep.gen_parity.at(name);
    bool ok = true;
    for (const auto& [rho, xp] : qn_ops) {
      RationalMatrix lhs = mul_sparse(g, rho);
      RationalMatrix rhs = mul_sparse(rho, g);
      if (gp && xp) rhs = -rhs;
      if (!is_zero(lhs - rhs)) ok = false;
    }
    report.entries.push_back(
        {name + " supercommutes with q(n)", ok ? 0.0 : 1.0, ok});
  }
  return report;
}

TensorFactor highest_weight_submodule(int n, const StrictPartition& lambda) {
  if (lambda.length() > n)
    throw std::invalid_argument("lambda longer than n");
  const int k = lambda.size();
  if (k < 1) throw std::invalid_argument("lambda must be nonempty");
  std::vector<TensorFactor> copies(k, natural_factor(n));
  TensorSpace space(n, std::move(copies));

  // lambda-weight subspace: basis indices whose absolute-value counts match.
  std::vector<Eigen::Index> weight_idx;
  for (Eigen::Index b = 0; b < space.dim(); ++b) {
    std::vector<int> counts(n + 1, 0);
    for (int s = 0; s < k; ++s) ++counts[space.digit(b, s) % n + 1];
    bool match = true;
    for (int i = 1; i <= n; ++i)
      if (counts[i] != lambda.part(i)) match = false;
    if (match) weight_idx.push_back(b);
  }

  // Raising operators e_{ij}, f_{ij} with i < j.
  std::vector<RationalMatrix> raising;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      raising.push_back(space.act_e(i, j));
      raising.push_back(space.act_f(i, j));
    }

  // Homogeneous highest weight vector: even parity first, then odd; within a
  // parity, the canonical first kernel basis vector.
  RationalVector highest;
  bool found = false;
  for (int par = 0; par <= 1 && !found; ++par) {
    std::vector<Eigen::Index> cols;
    for (Eigen::Index b : weight_idx)
      if (space.basis_parity(b) == par) cols.push_back(b);
    if (cols.empty()) continue;
    RationalMatrix stacked(space.dim() * raising.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t op = 0; op < raising.size(); ++op)
        stacked.block(op * space.dim(), c, space.dim(), 1) =
            raising[op].col(cols[c]);
    RationalMatrix kernel = kernel_basis(stacked);
    if (kernel.cols() > 0) {
      highest = RationalVector::Zero(space.dim());
      for (std::size_t c = 0; c < cols.size(); ++c)
        highest(cols[c]) = kernel(c, 0);
      found = true;
    }
  }
  if (!found)
    throw std::domain_error("no highest weight vector of weight " +
                            lambda.str());

  // Close under the full basis of q(n); reduced row echelon membership.
  std::vector<RationalMatrix> all_ops;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      all_ops.push_back(space.act_e(i, j));
      all_ops.push_back(space.act_f(i, j));
    }
  std::vector<RationalVector> echelon;  // reduced, pivot-normalized
  std::vector<Eigen::Index> pivots;
  auto insert = [&](RationalVector v) {
    for (std::size_t r = 0; r < echelon.size(); ++r)
      if (v(pivots[r]) != 0) v -= echelon[r] * v(pivots[r]);
    Eigen::Index piv = -1;
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (v(i) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return false;
    v /= v(piv);
    for (std::size_t r = 0; r < echelon.size(); ++r)
      if (echelon[r](piv) != 0) echelon[r] -= v * echelon[r](piv);
    echelon.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
  };
  insert(highest);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<RationalVector> snapshot = echelon;
    for (const RationalVector& v : snapshot)
      for (const RationalMatrix& op : all_ops)
        if (insert(op * v)) grew = true;
  }

  // Canonical ordering: sort by pivot coordinate.
  std::vector<std::size_t> order(echelon.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });

  TensorFactor out;
  out.name = "L(" + lambda.str() + ")";
  out.dim = static_cast<int>(echelon.size());
  RationalMatrix basis(space.dim(), out.dim);
  for (int c = 0; c < out.dim; ++c) basis.col(c) = echelon[order[c]];
  for (int c = 0; c < out.dim; ++c) {
    Eigen::Index piv = pivots[order[c]];
    out.parity.push_back(space.basis_parity(piv));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      RationalMatrix e_img = mul_sparse(space.act_e(i, j), basis);
      RationalMatrix f_img = mul_sparse(space.act_f(i, j), basis);
      RationalMatrix e_res(out.dim, out.dim), f_res(out.dim, out.dim);
      for (int c = 0; c < out.dim; ++c) {
        e_res.col(c) = solve_in_span(basis, e_img.col(c));
        f_res.col(c) = solve_in_span(basis, f_img.col(c));
      }
      out.e_act.push_back(std::move(e_res));
      out.f_act.push_back(std::move(f_res));
    }
  return out;
}

std::vector<UeaMonomial> central_element(int n, int r) {
  if (r < 1) throw std::invalid_argument("central element index r >= 1");
  const int degree = 2 * r - 1;
  // tables[m][0][i][j] = x_{ij}(m), tables[m][1][i][j] = x'_{ij}(m)
  using Table = std::vector<std::vector<std::vector<UeaMonomial>>>;
  std::vector<std::array<Table, 2>> levels(degree + 1);
  auto& level1 = levels[1];
  for (int v = 0; v < 2; ++v)
    level1[v].assign(n, std::vector<std::vector<UeaMonomial>>(
                            n, std::vector<UeaMonomial>()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      level1[0][i][j].push_back({1, {{'e', {i + 1, j + 1}}}});
      level1[1][i][j].push_back({1, {{'f', {i + 1, j + 1}}}});
    }
  for (int m = 2; m <= degree; ++m) {
    auto& level = levels[m];
    for (int v = 0; v < 2; ++v)
      level[v].assign(n, std::vector<std::vector<UeaMonomial>>(
                             n, std::vector<UeaMonomial>()));
    Rational sign = (m - 1) % 2 == 0 ? 1 : -1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int s = 0; s < n; ++s) {
          auto prepend = [&](char letter, const std::vector<UeaMonomial>& src,
                             const Rational& coef,
                             std::vector<UeaMonomial>& dst) {
            for (const UeaMonomial& mono : src) {
              UeaMonomial out{mono.coef * coef, {}};
              out.letters.push_back({letter, {i + 1, s + 1}});
              out.letters.insert(out.letters.end(), mono.letters.begin(),
                                 mono.letters.end());
              dst.push_back(std::move(out));
            }
          };
          // x_{ij}(m) = sum_s e_{is} x_{sj}(m-1) + (-1)^{m-1} f_{is} x'_{sj}
          prepend('e', levels[m - 1][0][s][j], 1, level[0][i][j]);
          prepend('f', levels[m - 1][1][s][j], sign, level[0][i][j]);
          // x'_{ij}(m) = sum_s e_{is} x'_{sj}(m-1) + (-1)^{m-1} f_{is} x_{sj}
          prepend('e', levels[m - 1][1][s][j], 1, level[1][i][j]);
          prepend('f', levels[m - 1][0][s][j], sign, level[1][i][j]);
        }
  }
  std::vector<UeaMonomial> z;
  for (int i = 0; i < n; ++i)
    for (const UeaMonomial& mono : levels[degree][0][i][i]) z.push_back(mono);
  return z;
}

namespace {

RationalMatrix evaluate_monomials(
    const std::vector<UeaMonomial>& monos, const TensorSpace& space,
    const std::function<RationalMatrix(char, int, int)>& rho) {
  RationalMatrix acc = RationalMatrix::Zero(space.dim(), space.dim());
  std::map<std::pair<char, std::pair<int, int>>, RationalMatrix> cache;
  auto letter_matrix = [&](const std::pair<char, std::pair<int, int>>& l)
      -> const RationalMatrix& {
    auto it = cache.find(l);
    if (it == cache.end())
      it = cache.emplace(l, rho(l.first, l.second.first, l.second.second))
               .first;
    return it->second;
  };
  for (const UeaMonomial& mono : monos) {
    RationalMatrix term = rational_identity(space.dim()) * mono.coef;
    for (const auto& letter : mono.letters)
      term = mul_sparse(term, letter_matrix(letter));
    acc += term;
  }
  return acc;
}

}  // namespace

RationalMatrix central_element_matrix(const TensorSpace& space, int r) {
  auto z = central_element(space.n(), r);
  return evaluate_monomials(z, space, [&](char species, int i, int j) {
    return species == 'e' ? space.act_e(i, j) : space.act_f(i, j);
  });
}

RationalMatrix central_element_matrix_at(const TensorSpace& space, int slot,
                                         int r) {
  auto z = central_element(space.n(), r);
  return evaluate_monomials(z, space, [&](char species, int i, int j) {
    int idx = (i - 1) * space.n() + (j - 1);
    const TensorFactor& f = space.factor(slot);
    return species == 'e' ? space.embed(slot, f.e_act[idx], 0)
                          : space.embed(slot, f.f_act[idx], 1);
  });
}

Rational central_eigenvalue(const StrictPartition& lambda, int r) {
  // z_r(lambda) = sum over 1<=s<=r, i_1<...<i_s, a_1+...+a_s=r-s of
  //   (-2)^{s-1} prod lambda_{i_t} (lambda_{i_t}^2-lambda_{i_t})^{a_t}.
  const int len = lambda.length();
  Rational total = 0;
  std::vector<int> chosen;
  std::function<void(int, int)> pick = [&](int from, int s_left) {
    if (s_left == 0) {
      int s = static_cast<int>(chosen.size());
      int rest = r - s;
      // distribute rest over s slots
      std::function<Rational(int, int)> distribute = [&](int slot,
                                                         int remaining) {
        if (slot == s) return remaining == 0 ? Rational(1) : Rational(0);
        Rational acc = 0;
        Rational lam = lambda.part(chosen[slot]);
        Rational base = lam * lam - lam;
        Rational power = 1;
        for (int a = 0; a <= remaining; ++a) {
          acc += power * distribute(slot + 1, remaining - a);
          power *= base;
        }
        return acc;
      };
      Rational coef = 1;
      for (int t = 1; t < s; ++t) coef *= -2;
      Rational prod = 1;
      for (int idx : chosen) prod *= lambda.part(idx);
      total += coef * prod * distribute(0, rest);
      return;
    }
    for (int i = from; i <= len; ++i) {
      chosen.push_back(i);
      pick(i + 1, s_left - 1);
      chosen.pop_back();
    }
  };
  for (int s = 1; s <= r; ++s) pick(1, s);
  return total;
}

VerificationReport casimir_scalar_checks(int n, int p, int d) {
  VerificationReport report;
  report.subject = "Casimir scalar checks (n=" + std::to_string(n) +
                   ", p=" + std::to_string(p) + ", d=" + std::to_string(d) +
                   ")";
  report.exact = true;
  auto push = [&](const std::string& name, bool ok) {
    report.entries.push_back({name, ok ? 0.0 : 1.0, ok});
  };

  // (a) The odd Casimir squares to a central-element combination on VxV:
  //     3 Omega^2 = Delta(z2) - z2 (x) 1 - 1 (x) z2 + 2 z1 (x) z1.
  {
    TensorSpace vv(n, {natural_factor(n), natural_factor(n)});
    RationalMatrix omega = vv.omega(0, 1);
    RationalMatrix lhs = mul_sparse(omega, omega) * Rational(3);
    RationalMatrix rhs = central_element_matrix(vv, 2) -
                         central_element_matrix_at(vv, 0, 2) -
                         central_element_matrix_at(vv, 1, 2) +
                         mul_sparse(central_element_matrix_at(vv, 0, 1),
                                    central_element_matrix_at(vv, 1, 1)) *
                             Rational(2);
    push("3 Omega^2 = Delta(z2) - z2x1 - 1xz2 + 2 z1xz1 on VxV",
         is_zero(lhs - rhs));
  }

  // (b) Omega^2 acts on each Pieri summand of L(beta) (x) V by the content
  //     scalar c(b)(c(b)+1); isotypic dimensions match the structure
  //     constants; and (d) Omega-bar splits each component into +/- sqrt
  //     eigenspaces of equal size.
  {
    StrictPartition beta({p});
    TensorFactor lbeta = highest_weight_submodule(n, beta);
    TensorSpace wv(n, {lbeta, natural_factor(n)});
    RationalMatrix omega = wv.omega(0, 1);
    RationalMatrix om2 = mul_sparse(omega, omega);
    RationalMatrix obar = wv.omega_bar(0, 1);
    push("Omega-bar^2 = Omega^2 on L(beta)xV",
         is_zero(mul_sparse(obar, obar) - om2));
    RationalMatrix product = rational_identity(wv.dim());
    bool kernel_dims_ok = true;
    bool split_ok = true;
    for (const StrictPartition& gamma : pieri_successors(beta, n)) {
      Box b = gamma.skew_boxes(beta)[0];
      Rational scalar = Rational(content(b)) * (content(b) + 1);
      RationalMatrix shifted = om2 - rational_identity(wv.dim()) * scalar;
      product = mul_sparse(product, shifted);
      RationalMatrix kernel = kernel_basis(shifted);
      std::int64_t expected = multiplicity(beta, StrictPartition({1}), gamma) *
                              simple_module_dimension(gamma, n);
      if (kernel.cols() != expected) kernel_dims_ok = false;
      // Omega-bar restricted to the isotypic component: square equals the
      // scalar, trace zero; nonzero exactly when the content is (boxes of
      // the branching graph always have content >= 1).
      RationalMatrix restricted(kernel.cols(), kernel.cols());
      RationalMatrix image = mul_sparse(obar, kernel);
      for (Eigen::Index c = 0; c < kernel.cols(); ++c)
        restricted.col(c) = solve_in_span(kernel, image.col(c));
      Rational trace = 0;
      for (Eigen::Index i = 0; i < restricted.rows(); ++i)
        trace += restricted(i, i);
      if (trace != 0) split_ok = false;
      if (content(b) >= 1 && is_zero(restricted)) split_ok = false;
      if (!is_zero(mul_sparse(restricted, restricted) -
                   rational_identity(kernel.cols()) * scalar))
        split_ok = false;
    }
    push("Omega^2 annihilates prod (Omega^2 - c(b)(c(b)+1)) on L(beta)xV",
         is_zero(product));
    push("isotypic dimensions match multiplicity * dim L(gamma)",
         kernel_dims_ok);
    push("Omega-bar splits isotypic components into +/- sqrt eigenspaces",
         split_ok);
  }

  // (c) The quotient relations on L(alpha) (x) L(beta) (x) V^d:
  //     xt1^2 = n(n+1), yt1^2 (yt1^2 - p(p+1)) = 0.
  // The staircase extraction lives in V^(x)(n(n+1)/2); only run where the
  // ambient stays desk-sized.
  double alpha_ambient = std::pow(2.0 * n, staircase(n).size());
  if (alpha_ambient <= 4096.0) {
    TensorFactor lalpha = highest_weight_submodule(n, staircase(n));
    TensorFactor lbeta = highest_weight_submodule(n, StrictPartition({p}));
    TensorRep rep = twoboundary_rep(lalpha, lbeta, n, d);
    const RationalMatrix& xt1 = rep.generator("xt1");
    RationalMatrix yt1 = rep.space.omega(1, 2);
    RationalMatrix xt1sq = mul_sparse(xt1, xt1);
    RationalMatrix yt1sq = mul_sparse(yt1, yt1);
    Eigen::Index dim = rep.space.dim();
    push("xt1^2 = n(n+1)",
         is_zero(xt1sq - rational_identity(dim) * Rational(n * (n + 1))));
    push("yt1^2 (yt1^2 - p(p+1)) = 0",
         is_zero(mul_sparse(yt1sq,
                            yt1sq - rational_identity(dim) *
                                        Rational(p * (p + 1)))));
    push("yt1 = zt1 - xt1",
         is_zero(rep.generator("zt1") - xt1 - yt1));
  }

  return report;
}

}  // namespace qhc
