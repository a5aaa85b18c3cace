#pragma once

#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eps/antipode.hpp"
#include "eps/checks.hpp"
#include "eps/coproduct.hpp"
#include "eps/forest.hpp"
#include "eps/instances.hpp"

namespace eps {

/// An Ω-operated algebra with a generator map: carrier instance, one
/// operator P_ω per Ω-label and an image f(x) per X-label.
template <class B>
struct OperatedTarget {
  std::string name;
  EpsInstance<B> carrier;
  std::map<std::string, LinOp<B>> operators;
  std::map<std::string, LinComb<B>> generators;

  const LinOp<B>& op(const std::string& omega) const {
    auto it = operators.find(omega);
    if (it == operators.end()) throw std::invalid_argument("target '" + name + "' has no operator for '" + omega + "'");
    return it->second;
  }

  const LinComb<B>& gen(const std::string& x) const {
    auto it = generators.find(x);
    if (it == generators.end()) throw std::invalid_argument("target '" + name + "' has no image for '" + x + "'");
    return it->second;
  }
};

namespace detail {

template <class B>
LinComb<B> evaluate_range(std::span<const Forest::Node> nodes, std::size_t begin, std::size_t end,
                          const OperatedTarget<B>& target) {
  LinComb<B> out = target.carrier.one();
  for (std::size_t i = begin; i < end; i += nodes[i].size) {
    const auto& node = nodes[i];
    LinComb<B> value;
    if (node.dec.kind == DecorationKind::X) {
      value = target.gen(node.dec.name());
    } else {
      value = target.op(node.dec.name())(evaluate_range(nodes, i + 1, i + node.size, target));
    }
    out = target.carrier.mul(out, value);
    if (out.is_zero()) break;
  }
  return out;
}

}  // namespace detail

/// The operated-algebra morphism f̄ extending f: f̄(1) = 1, f̄(•_x) = f(x),
/// f̄(B⁺_ω F) = P_ω(f̄ F), f̄(F₁F₂) = f̄(F₁)f̄(F₂).
template <class B>
LinComb<B> evaluate(const Forest& f, const OperatedTarget<B>& target) {
  return detail::evaluate_range(f.nodes(), 0, f.vertex_count(), target);
}

template <class B>
LinComb<B> evaluate(const ForestComb& a, const OperatedTarget<B>& target) {
  LinComb<B> out;
  for (const auto& [f, c] : a) out.add(evaluate(f, target), c);
  return out;
}

/// φ(FG) = φ(F)φ(G) for consecutive sample pairs.
template <class B, class Phi>
Witness check_multiplicative(const OperatedTarget<B>& target, Phi&& phi, std::span<const Forest> sample) {
  for (std::size_t i = 0; i + 1 < sample.size(); ++i) {
    const Forest& f = sample[i];
    const Forest& g = sample[i + 1];
    auto w = compare_sides("multiplicativity at (" + f.to_string() + ", " + g.to_string() + ")", phi(f * g),
                           target.carrier.mul(phi(f), phi(g)));
    if (!w) return w;
  }
  return Witness::pass();
}

/// φ(B⁺_ω F) = P_ω(φ F) for every operator of the target.
template <class B, class Phi>
Witness check_intertwining(const OperatedTarget<B>& target, Phi&& phi, std::span<const Forest> sample,
                           const Alphabets& alphabets) {
  for (const auto& f : sample) {
    for (const auto& omega : alphabets.omega_labels()) {
      const Forest grafted(graft(alphabets.omega(omega), f));
      auto w = compare_sides("intertwining of " + omega + " at " + f.to_string(), phi(grafted),
                             target.op(omega)(phi(f)));
      if (!w) return w;
    }
  }
  return Witness::pass();
}

/// Δ∘φ = (φ⊗φ)∘Δε
template <class B, class Phi>
Witness check_delta_compat(const OperatedTarget<B>& target, Phi&& phi, std::span<const Forest> sample) {
  for (const auto& f : sample) {
    LinComb<Tensor2<B>> rhs;
    for (const auto& [t, c] : forest_coproduct(f)) rhs.add(lc_tensor(phi(t.left), phi(t.right)), c);
    auto w = compare_sides("coproduct compatibility at " + f.to_string(), target.carrier.delta(phi(f)), rhs);
    if (!w) return w;
  }
  return Witness::pass();
}

/// φ(1) = 1 and φ(•_x) = f(x).
template <class B, class Phi>
Witness check_generators(const OperatedTarget<B>& target, Phi&& phi, const Alphabets& alphabets) {
  auto w = compare_sides("unit", phi(Forest{}), target.carrier.one());
  if (!w) return w;
  for (const auto& x : alphabets.x_labels()) {
    w = compare_sides("generator " + x, phi(Forest(Tree::leaf(alphabets.x(x)))), target.gen(x));
    if (!w) return w;
  }
  return Witness::pass();
}

/// Multiplicativity, operator intertwining and Δ-compatibility of f̄ on the sample.
template <class B>
Witness check_operated_morphism(const OperatedTarget<B>& target, std::span<const Forest> sample,
                                const Alphabets& alphabets) {
  auto phi = [&](const Forest& f) { return evaluate(f, target); };
  if (auto w = check_multiplicative(target, phi, sample); !w) return w;
  if (auto w = check_intertwining(target, phi, sample, alphabets); !w) return w;
  return check_delta_compat(target, phi, sample);
}

/// Checks a candidate map φ against every defining equation of the morphism
/// into the target. Only f̄ itself passes.
template <class B, class Phi>
Witness check_candidate_morphism(const OperatedTarget<B>& target, Phi&& phi, std::span<const Forest> sample,
                                 const Alphabets& alphabets) {
  if (auto w = check_generators(target, phi, alphabets); !w) return w;
  if (auto w = check_multiplicative(target, phi, sample); !w) return w;
  if (auto w = check_intertwining(target, phi, sample, alphabets); !w) return w;
  for (const auto& f : sample) {
    auto w = compare_sides("agreement with the evaluation at " + f.to_string(), phi(f), evaluate(f, target));
    if (!w) return w;
  }
  return Witness::pass();
}

/// S∘f̄ = f̄∘S
template <class B>
Witness check_hopf_morphism_compat(const OperatedTarget<B>& target, std::span<const Forest> sample) {
  const auto source = forest_instance();
  for (const auto& f : sample) {
    auto w = compare_sides("antipode compatibility at " + f.to_string(), antipode(target.carrier, evaluate(f, target)),
                           evaluate(antipode(source, ForestComb(f)), target));
    if (!w) return w;
  }
  return Witness::pass();
}

/// The target's own cocycle structure: Δ(f(x)) = 1⊗1 and
/// Δ∘P_ω = id⊗1 + (id⊗P_ω)∘Δ on the evaluated sample.
template <class B>
Witness check_target_cocycle(const OperatedTarget<B>& target, std::span<const Forest> sample,
                             const Alphabets& alphabets) {
  const auto& inst = target.carrier;
  if (!inst.unitary()) return Witness::fail("carrier '" + inst.name + "' has no unit");
  if (!inst.weight.is_zero()) return Witness::fail("carrier '" + inst.name + "' does not have weight 0");
  const LinComb<Tensor2<B>> one_one(Tensor2<B>{*inst.unit, *inst.unit});
  for (const auto& x : alphabets.x_labels()) {
    auto w = compare_sides("coproduct of the image of " + x, inst.delta(target.gen(x)), one_one);
    if (!w) return w;
  }
  for (const auto& f : sample) {
    const auto a = evaluate(f, target);
    for (const auto& omega : alphabets.omega_labels()) {
      const auto& p = target.op(omega);
      auto rhs = lc_tensor(a, inst.one());
      for (const auto& [t, c] : inst.delta(a)) rhs.add(lc_tensor(LinComb<B>(t.left), p(t.right)), c);
      auto w = compare_sides("cocycle condition of " + omega + " at the image of " + f.to_string(),
                             inst.delta(p(a)), rhs);
      if (!w) return w;
    }
  }
  return Witness::pass();
}

/// Forests themselves: P_ω = B⁺_ω, f(x) = •_x. f̄ is the identity.
OperatedTarget<Forest> identity_target(const Alphabets& alphabets);

/// Forests with labels renamed: f(x) = •_{σ(x)} and P_ω = B⁺_{τ(ω)}. Unlisted labels map to themselves.
OperatedTarget<Forest> relabel_target(const Alphabets& alphabets, const std::map<std::string, std::string>& renaming);

/// The trivial instance on forests with P_ω = 0 and f(x) = 1.
OperatedTarget<Forest> collapse_target(const Alphabets& alphabets);

/// P_ω = 2·B⁺_ω; violates the cocycle condition.
OperatedTarget<Forest> broken_target(const Alphabets& alphabets);

/// Divided differences with P_ω = 0 and f(x) = x₁.
OperatedTarget<Word> divdiff_zero_target(const Alphabets& alphabets);

/// "identity", "collapse", "broken" or "relabel:x=y,a=b".
OperatedTarget<Forest> parse_forest_target(const std::string& spec, const Alphabets& alphabets);

}  // namespace eps
