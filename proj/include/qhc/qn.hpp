#pragma once

#include "qhc/partitions.hpp"
#include "qhc/rational.hpp"
#include "qhc/verify.hpp"
#include "qhc/wordpoly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qhc {

// Basis matrices of q(n) acting on V = C^{2n}: e_{ij} = diag(E_ij, E_ij),
// f_{ij} = antidiag(E_ij, E_ij), C = [[0,-I],[I,0]].  Indices are 1-based.
struct QnAlgebra {
  explicit QnAlgebra(int n);
  int n;
  RationalMatrix e(int i, int j) const;
  RationalMatrix f(int i, int j) const;
  RationalMatrix cmat() const;
};

// One tensor factor together with the q(n) action on it.
struct TensorFactor {
  std::string name;
  int dim = 0;
  std::vector<int> parity;            // per basis vector
  std::vector<RationalMatrix> e_act;  // (i-1)*n + (j-1)
  std::vector<RationalMatrix> f_act;
};

TensorFactor natural_factor(int n);
TensorFactor trivial_factor(int n);

// Tensor product of factors, with dense exact operators.  Slot 0 is the
// leftmost factor.
class TensorSpace {
 public:
  TensorSpace(int n, std::vector<TensorFactor> factors);

  int n() const { return n_; }
  Eigen::Index dim() const { return dim_; }
  int slots() const { return static_cast<int>(factors_.size()); }
  const TensorFactor& factor(int slot) const { return factors_.at(slot); }

  int digit(Eigen::Index basis, int slot) const;
  Eigen::Index with_digit(Eigen::Index basis, int slot, int value) const;
  int basis_parity(Eigen::Index basis) const;
  int prefix_parity(Eigen::Index basis, int slot) const;  // slots < slot

  // Koszul embedding of a local operator of the given parity at one slot.
  RationalMatrix embed(int slot, const RationalMatrix& local,
                       int op_parity) const;

  // Coproduct action of e_{ij} / f_{ij} on the whole space.
  RationalMatrix act_e(int i, int j) const;
  RationalMatrix act_f(int i, int j) const;

  // Odd Casimir sum_{ij} e_{ij} (x) f_{ji} - f_{ij} (x) e_{ji} applied at
  // slots a < b.
  RationalMatrix omega(int a, int b) const;
  // Even variant: omega composed with the Koszul embedding of C at slot b.
  RationalMatrix omega_bar(int a, int b) const;

 private:
  int n_;
  std::vector<TensorFactor> factors_;
  Eigen::Index dim_;
  std::vector<Eigen::Index> stride_;
  QnAlgebra qn_;
};

// Oracle-side representation: exact matrices for a named generator set on a
// tensor space, plus the parity of each generator for supercommutation
// checks.
struct TensorRep {
  TensorSpace space;
  RationalGenerators gen;
  std::map<std::string, int> gen_parity;

  const RationalMatrix& generator(const std::string& name) const;
};

// Sergeev action on V^{(x)d}: s_i signed swaps, c_i Koszul-embedded C.
TensorRep sergeev_rep(int n, int d);

// Two-boundary action on M (x) N (x) V^{(x)d}: xt1 -> Omega_{M,1},
// zt0 -> Omega_{M,N}, zt_i -> Omega_{M,i}+Omega_{N,i}+sum_j Omega_{j,i}.
TensorRep twoboundary_rep(const TensorFactor& m, const TensorFactor& f_n,
                          int n, int d);

// w_1 = 0, w_{i+1} = s_i w_i s_i - (c_i - c_{i+1}) s_i: the Sergeev images
// of zt_i when both boundary modules are trivial.
std::vector<RationalMatrix> sergeev_w_elements(const TensorRep& rep, int d);

// Nazarov generators on the one-boundary space: x_1 = omega_bar(M,1),
// x_{i+1} = s_i x_i s_i + s_i - c_i c_{i+1} s_i.
std::vector<RationalMatrix> nazarov_x_elements(const TensorRep& rep,
                                               const RationalMatrix& x1,
                                               int d);

// Residuals of supercommutation between every named generator and every
// e_{ij}, f_{ij}; exact.
VerificationReport supercommutation_check(const TensorRep& rep);

// Simple highest-weight submodule L(lambda) of V^{(x)|lambda|}, extracted as
// a homogeneous exact basis, packaged as a tensor factor.
TensorFactor highest_weight_submodule(int n, const StrictPartition& lambda);

// Sergeev central element z_r as a noncommutative polynomial in the e/f
// basis letters.
struct UeaMonomial {
  Rational coef;
  std::vector<std::pair<char, std::pair<int, int>>> letters;  // 'e' or 'f'
};
std::vector<UeaMonomial> central_element(int n, int r);

// z_r acting on the whole tensor space through the coproduct action.
RationalMatrix central_element_matrix(const TensorSpace& space, int r);
// z_r acting through one slot only.
RationalMatrix central_element_matrix_at(const TensorSpace& space, int slot,
                                         int r);
// Closed-form eigenvalue z_r(lambda) on a highest weight vector.
Rational central_eigenvalue(const StrictPartition& lambda, int r);

// Exact checks tying Omega^2 to the central elements, the content scalars
// on Pieri summands, the quotient relations on the boundary tensor space,
// and the +/- sqrt split of Omega-bar on isotypic components.
VerificationReport casimir_scalar_checks(int n, int p, int d);

}  // namespace qhc
