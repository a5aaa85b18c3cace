#include "eps/coproduct.hpp"

namespace eps {

namespace {

LinComb<Forest> concat_product(const Forest& a, const Forest& b) { return LinComb<Forest>(concat(a, b)); }

}  // namespace

ForestTensor forest_coproduct_recursive(const Forest& f) {
  if (f.is_unit()) return {};
  if (f.breadth() >= 2) {
    auto [first, rest] = f.split_first();
    Forest t(first);
    ForestTensor out;
    for (const auto& [bc, c] : forest_coproduct_recursive(rest)) {
      out.add(Tensor2<Forest>{concat(t, bc.left), bc.right}, c);
    }
    for (const auto& [bc, c] : forest_coproduct_recursive(t)) {
      out.add(Tensor2<Forest>{bc.left, concat(bc.right, rest)}, c);
    }
    return out;
  }
  auto [tree, unused] = f.split_first();
  if (tree.root().kind == DecorationKind::X) {
    return ForestTensor(Tensor2<Forest>{Forest{}, Forest{}});
  }
  Forest below = tree.children();
  ForestTensor out(Tensor2<Forest>{below, Forest{}});
  for (const auto& [bc, c] : forest_coproduct_recursive(below)) {
    out.add(Tensor2<Forest>{bc.left, Forest(graft(tree.root(), bc.right))}, c);
  }
  return out;
}

ForestTensor forest_coproduct(const Forest& f) {
  const std::size_t n = f.vertex_count();
  ForestTensor out;
  if (n == 0) return out;
  const auto order = vertex_order_indices(f);
  std::vector<char> left(n, 0);
  std::vector<char> right(n, 0);
  for (std::size_t k = 1; k < n; ++k) right[order[k]] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    // left = {u_1..u_{k}} (0-based: order[0..k)), right = order[k+1..n)
    out.add(Tensor2<Forest>{restrict_mask(f, left), restrict_mask(f, right)}, Rat(1));
    left[order[k]] = 1;
    if (k + 1 < n) right[order[k + 1]] = 0;
  }
  return out;
}

ForestComb graft_lin(const Decoration& omega, const ForestComb& a) {
  ForestComb out;
  for (const auto& [f, c] : a) out.add(Forest(graft(omega, f)), c);
  return out;
}

EpsInstance<Forest> forest_instance() {
  EpsInstance<Forest> inst;
  inst.name = "forest";
  inst.product = concat_product;
  inst.unit = Forest{};
  inst.coproduct = forest_coproduct;
  inst.weight = Rat(0);
  inst.nilpotency_bound = [](const Forest& f) { return f.vertex_count(); };
  return inst;
}

}  // namespace eps
