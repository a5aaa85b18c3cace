#pragma once

#include "eps/checks.hpp"
#include "eps/coproduct.hpp"
#include "eps/instance.hpp"

namespace eps {

/// a▷b = Σ b₁ a b₂
template <class B>
LinComb<B> prelie(const EpsInstance<B>& inst, const LinComb<B>& a, const LinComb<B>& b) {
  LinComb<B> out;
  for (const auto& [y, cy] : b) {
    for (const auto& [t, c] : inst.coproduct(y)) {
      out.add(inst.mul(inst.mul(LinComb<B>(t.left), a), LinComb<B>(t.right)), cy * c);
    }
  }
  return out;
}

/// F₁▷F₂ = Σ_k F₂|I_k F₁ F₂|Ī_k, read off the biideals of F₂.
ForestComb prelie_forest(const Forest& f1, const Forest& f2);

/// [a,b] = a▷b − b▷a
template <class B>
LinComb<B> bracket(const EpsInstance<B>& inst, const LinComb<B>& a, const LinComb<B>& b) {
  return prelie(inst, a, b) - prelie(inst, b, a);
}

/// (a▷b)▷c − a▷(b▷c) = (b▷a)▷c − b▷(a▷c)
template <class B>
Witness check_prelie_identity(const EpsInstance<B>& inst, const LinComb<B>& a, const LinComb<B>& b,
                              const LinComb<B>& c) {
  auto lhs = prelie(inst, prelie(inst, a, b), c) - prelie(inst, a, prelie(inst, b, c));
  auto rhs = prelie(inst, prelie(inst, b, a), c) - prelie(inst, b, prelie(inst, a, c));
  return compare_sides("pre-Lie identity at (" + format_lincomb(a) + ", " + format_lincomb(b) + ", " +
                           format_lincomb(c) + ")",
                       lhs, rhs);
}

/// [[a,b],c] + [[b,c],a] + [[c,a],b] = 0
template <class B>
Witness check_jacobi(const EpsInstance<B>& inst, const LinComb<B>& a, const LinComb<B>& b, const LinComb<B>& c) {
  auto sum = bracket(inst, bracket(inst, a, b), c) + bracket(inst, bracket(inst, b, c), a) +
             bracket(inst, bracket(inst, c, a), b);
  return compare_sides("Jacobi identity at (" + format_lincomb(a) + ", " + format_lincomb(b) + ", " +
                           format_lincomb(c) + ")",
                       sum, LinComb<B>{});
}

}  // namespace eps
