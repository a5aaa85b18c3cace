#pragma once

#include <string>
#include <utility>

#include "eps/coproduct.hpp"
#include "eps/instance.hpp"
#include "eps/textio.hpp"

namespace eps {

/// Outcome of an exact identity check; on failure, a readable counterexample.
struct Witness {
  bool ok = true;
  std::string detail;

  static Witness pass() { return {}; }
  static Witness fail(std::string detail) { return {false, std::move(detail)}; }
  explicit operator bool() const { return ok; }
};

/// Compares two sides of an identity; the failure text names both sides and their difference.
template <class B>
Witness compare_sides(const std::string& what, const LinComb<B>& lhs, const LinComb<B>& rhs) {
  if (lhs == rhs) return Witness::pass();
  return Witness::fail(what + ": lhs = " + format_lincomb(lhs) + "; rhs = " + format_lincomb(rhs) +
                       "; lhs - rhs = " + format_lincomb(lhs - rhs));
}

/// Δ(ab) = a·Δ(b) + Δ(a)·b + λ(a⊗b)
template <class B>
Witness check_compat(const EpsInstance<B>& inst, const B& a, const B& b) {
  const LinComb<B> la(a);
  const LinComb<B> lb(b);
  auto lhs = inst.delta(inst.product(a, b));
  auto rhs = left_act(inst, la, inst.coproduct(b)) + right_act(inst, inst.coproduct(a), lb);
  rhs.add(Tensor2<B>{a, b}, inst.weight);
  return compare_sides("compatibility at (" + basis_text(a) + ", " + basis_text(b) + ")", lhs, rhs);
}

/// (Δ⊗id)Δ and (id⊗Δ)Δ of a tensor combination, for any coproduct rule.
template <class B, class Delta>
std::pair<LinComb<Tensor3<B>>, LinComb<Tensor3<B>>> coassoc_sides(const LinComb<Tensor2<B>>& d, Delta&& delta) {
  LinComb<Tensor3<B>> left;
  LinComb<Tensor3<B>> right;
  for (const auto& [t, c] : d) {
    for (const auto& [u, cu] : delta(t.left)) left.add(Tensor3<B>{u.left, u.right, t.right}, c * cu);
    for (const auto& [u, cu] : delta(t.right)) right.add(Tensor3<B>{t.left, u.left, u.right}, c * cu);
  }
  return {std::move(left), std::move(right)};
}

template <class B>
Witness check_coassoc(const EpsInstance<B>& inst, const B& a) {
  auto [lhs, rhs] = coassoc_sides(inst.coproduct(a), inst.coproduct);
  return compare_sides("coassociativity at " + basis_text(a), lhs, rhs);
}

/// Δε(B⁺_ω a) = a⊗1 + (id⊗B⁺_ω)Δε(a)
Witness check_cocycle(const Decoration& omega, const ForestComb& a);

/// Δ on A⊗B: Σ(a₁⊗1)⊗(a₂⊗b) + Σ(a⊗b₁)⊗(1⊗b₂) + λ(a⊗1)⊗(1⊗b).
template <class A, class B>
LinComb<Tensor2<Tensor2<A, B>>> tensor_square_coproduct(const EpsInstance<A>& ia, const EpsInstance<B>& ib,
                                                          const A& a, const B& b) {
  using P = Tensor2<A, B>;
  if (!(ia.weight == ib.weight)) {
    throw std::invalid_argument("tensor coproduct needs equal weights, got " + ia.weight.to_string() + " and " +
                                ib.weight.to_string());
  }
  ia.require_unitary("the tensor coproduct");
  ib.require_unitary("the tensor coproduct");
  const A& one_a = *ia.unit;
  const B& one_b = *ib.unit;
  LinComb<Tensor2<P>> out;
  for (const auto& [t, c] : ia.coproduct(a)) out.add(Tensor2<P>{P{t.left, one_b}, P{t.right, b}}, c);
  for (const auto& [t, c] : ib.coproduct(b)) out.add(Tensor2<P>{P{a, t.left}, P{one_a, t.right}}, c);
  out.add(Tensor2<P>{P{a, one_b}, P{one_a, b}}, ia.weight);
  return out;
}

/// A⊗B with the componentwise product and the coproduct above.
template <class A, class B>
EpsInstance<Tensor2<A, B>> tensor_square_instance(const EpsInstance<A>& ia, const EpsInstance<B>& ib) {
  using P = Tensor2<A, B>;
  ia.require_unitary("the tensor coproduct");
  ib.require_unitary("the tensor coproduct");
  EpsInstance<P> out;
  out.name = ia.name + "#" + ib.name;
  out.product = [ia, ib](const P& x, const P& y) {
    return lc_tensor(ia.product(x.left, y.left), ib.product(x.right, y.right));
  };
  out.unit = P{*ia.unit, *ib.unit};
  out.coproduct = [ia, ib](const P& p) { return tensor_square_coproduct(ia, ib, p.left, p.right); };
  out.weight = ia.weight;
  return out;
}

/// Δ_A(ab) = (m⊗m)Δ_{A⊗A}(a⊗b)
template <class B>
Witness check_mult_coalgebra_morphism(const EpsInstance<B>& inst, const B& a, const B& b) {
  auto lhs = inst.delta(inst.product(a, b));
  LinComb<Tensor2<B>> rhs;
  for (const auto& [t, c] : tensor_square_coproduct(inst, inst, a, b)) {
    rhs.add(lc_tensor(inst.product(t.left.left, t.left.right), inst.product(t.right.left, t.right.right)), c);
  }
  return compare_sides("m as coalgebra morphism at (" + basis_text(a) + ", " + basis_text(b) + ")", lhs, rhs);
}

}  // namespace eps
