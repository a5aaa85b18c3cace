#include "eps/checks.hpp"

namespace eps {

Witness check_cocycle(const Decoration& omega, const ForestComb& a) {
  const auto lhs = extend_linear(graft_lin(omega, a), forest_coproduct);
  ForestTensor rhs = lc_tensor(a, ForestComb(Forest{}));
  for (const auto& [t, c] : extend_linear(a, forest_coproduct)) {
    rhs.add(Tensor2<Forest>{t.left, Forest(graft(omega, t.right))}, c);
  }
  return compare_sides("cocycle condition of " + omega.name() + " at " + format_lincomb(a), lhs, rhs);
}

}  // namespace eps
