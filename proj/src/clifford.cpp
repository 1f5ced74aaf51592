#include "qhc/clifford.hpp"

namespace qhc {

CliffordOrder CliffordOrder::module_order(int d, bool with_cm) {
  CliffordOrder o;
  o.bits_ = d + 1 + (with_cm ? 1 : 0);
  // rank[j] = position of generator j in the normal order
  std::vector<int> rank(o.bits_);
  for (int j = 0; j <= d; ++j) rank[j] = with_cm ? j + 1 : j;
  if (with_cm) rank[d + 1] = 0;  // c_M leftmost
  o.before_.assign(o.bits_, 0);
  o.after_.assign(o.bits_, 0);
  for (int j = 0; j < o.bits_; ++j)
    for (int k = 0; k < o.bits_; ++k) {
      if (k == j) continue;
      if (rank[k] < rank[j])
        o.before_[j] |= CliffordMask{1} << k;
      else
        o.after_[j] |= CliffordMask{1} << k;
    }
  return o;
}

std::pair<int, CliffordMask> clifford_sign(CliffordMask a, CliffordMask b,
                                           const CliffordOrder& order) {
  int sign = 1;
  CliffordMask mask = a;
  // Absorb b's generators in normal order (ascending rank = ascending
  // "before" size).  Bits of b sorted by rank: iterate all bits, smallest
  // rank first; ranks are monotone in the bit index except c_M, so handle
  // c_M (the unique bit with empty "before") first.
  std::vector<int> bits;
  for (int j = 0; j < order.bits(); ++j)
    if (b & (CliffordMask{1} << j)) bits.push_back(j);
  std::stable_sort(bits.begin(), bits.end(), [&](int x, int y) {
    return __builtin_popcount(order.before(x)) <
           __builtin_popcount(order.before(y));
  });
  for (int j : bits) {
    auto [s, m] = mul_right(mask, j, order);
    sign *= s;
    mask = m;
  }
  return {sign, mask};
}

}  // namespace qhc
