#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "eps/errors.hpp"
#include "eps/freemod.hpp"

namespace eps {

/// One weighted infinitesimal (unitary) bialgebra presented at basis level.
///
/// Everything generic in the library extends product and coproduct
/// linearly from these two rules.
template <class B>
struct EpsInstance {
  using Basis = B;
  using Product = std::function<LinComb<B>(const B&, const B&)>;
  using Coproduct = std::function<LinComb<Tensor2<B>>(const B&)>;
  /// n such that D^{∘(n+1)} vanishes on the basis element.
  using NilpotencyBound = std::function<std::size_t(const B&)>;

  std::string name;
  Product product;
  std::optional<B> unit;
  Coproduct coproduct;
  Rat weight;
  NilpotencyBound nilpotency_bound;  // empty: D is not known to be locally nilpotent
  std::string non_nilpotent_reason;

  bool unitary() const { return unit.has_value(); }
  bool nilpotent() const { return static_cast<bool>(nilpotency_bound); }

  LinComb<B> mul(const LinComb<B>& a, const LinComb<B>& b) const {
    LinComb<B> out;
    for (const auto& [x, cx] : a) {
      for (const auto& [y, cy] : b) out.add(product(x, y), cx * cy);
    }
    return out;
  }

  LinComb<Tensor2<B>> delta(const LinComb<B>& a) const { return extend_linear(a, coproduct); }

  LinComb<B> one() const {
    if (!unit) throw PreconditionError("instance '" + name + "' has no unit");
    return LinComb<B>(*unit);
  }

  void require_unitary(const char* what) const {
    if (!unit) throw PreconditionError(std::string(what) + " requires a unitary instance; '" + name + "' is not");
  }

  void require_nilpotent(const char* what) const {
    if (!nilpotency_bound) {
      throw PreconditionError(std::string(what) + " is not available for instance '" + name +
                              "': " + non_nilpotent_reason);
    }
  }
};

/// a·(b⊗c) = ab⊗c
template <class B>
LinComb<Tensor2<B>> left_act(const EpsInstance<B>& inst, const LinComb<B>& a, const LinComb<Tensor2<B>>& t) {
  LinComb<Tensor2<B>> out;
  for (const auto& [x, cx] : a) {
    for (const auto& [bc, c] : t) {
      for (const auto& [p, cp] : inst.product(x, bc.left)) out.add(Tensor2<B>{p, bc.right}, cx * c * cp);
    }
  }
  return out;
}

/// (b⊗c)·a = b⊗ca
template <class B>
LinComb<Tensor2<B>> right_act(const EpsInstance<B>& inst, const LinComb<Tensor2<B>>& t, const LinComb<B>& a) {
  LinComb<Tensor2<B>> out;
  for (const auto& [bc, c] : t) {
    for (const auto& [x, cx] : a) {
      for (const auto& [p, cp] : inst.product(bc.right, x)) out.add(Tensor2<B>{bc.left, p}, c * cx * cp);
    }
  }
  return out;
}

template <class B>
LinComb<Tensor2<B>> bimodule_act(const EpsInstance<B>& inst, const LinComb<B>& left, const LinComb<Tensor2<B>>& t,
                                 const LinComb<B>& right) {
  return right_act(inst, left_act(inst, left, t), right);
}

/// m applied to every tensor term.
template <class B>
LinComb<B> multiply_out(const EpsInstance<B>& inst, const LinComb<Tensor2<B>>& t) {
  LinComb<B> out;
  for (const auto& [bc, c] : t) out.add(inst.product(bc.left, bc.right), c);
  return out;
}

/// f∗g = m∘(f⊗g)∘Δ
template <class B>
LinOp<B> op_convolve(const LinOp<B>& f, const LinOp<B>& g, const EpsInstance<B>& inst) {
  return LinOp<B>([f, g, inst](const B& b) {
    LinComb<B> out;
    for (const auto& [t, c] : inst.coproduct(b)) {
      auto l = f(t.left);
      if (l.is_zero()) continue;
      out.add(inst.mul(l, g(t.right)), c);
    }
    return out;
  });
}

/// f⊛g = f∗g + f + g; the zero map is its unit.
template <class B>
LinOp<B> op_circ(const LinOp<B>& f, const LinOp<B>& g, const EpsInstance<B>& inst) {
  return op_add(op_convolve(f, g, inst), op_add(f, g));
}

/// The derivation D = m∘Δ.
template <class B>
LinOp<B> derivation(const EpsInstance<B>& inst) {
  return LinOp<B>([inst](const B& b) { return multiply_out(inst, inst.coproduct(b)); });
}

}  // namespace eps
