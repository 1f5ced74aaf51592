#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qhc {

// Bitmask over Clifford generators; the basis monomial is the normally
// ordered product of the set generators.
using CliffordMask = std::uint32_t;

// Normal order of the generators.  D-modules use c_0..c_d at bits 0..d in
// that order; E-modules add c_M at bit d+1 but place it leftmost.
class CliffordOrder {
 public:
  static CliffordOrder module_order(int d, bool with_cm);

  int bits() const { return bits_; }
  // Bits strictly before / after bit j in normal order.
  CliffordMask before(int j) const { return before_.at(j); }
  CliffordMask after(int j) const { return after_.at(j); }

 private:
  int bits_ = 0;
  std::vector<CliffordMask> before_, after_;
};

inline int parity_of_popcount(CliffordMask m) {
  return __builtin_popcount(m) & 1;
}

// c_j * c^mask, result (sign, mask').
inline std::pair<int, CliffordMask> mul_left(int j, CliffordMask mask,
                                             const CliffordOrder& order) {
  int sign = parity_of_popcount(mask & order.before(j)) ? -1 : 1;
  if (mask & (CliffordMask{1} << j)) sign = -sign;  // c_j^2 = -1
  return {sign, mask ^ (CliffordMask{1} << j)};
}

// c^mask * c_j, result (sign, mask').
inline std::pair<int, CliffordMask> mul_right(CliffordMask mask, int j,
                                              const CliffordOrder& order) {
  int sign = parity_of_popcount(mask & order.after(j)) ? -1 : 1;
  if (mask & (CliffordMask{1} << j)) sign = -sign;
  return {sign, mask ^ (CliffordMask{1} << j)};
}

// c^a * c^b: sign from anticommutation inversions plus one -1 per
// coinciding generator; the resulting monomial is the symmetric difference.
std::pair<int, CliffordMask> clifford_sign(CliffordMask a, CliffordMask b,
                                           const CliffordOrder& order);

}  // namespace qhc
