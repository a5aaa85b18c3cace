#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "eps/checks.hpp"
#include "eps/instance.hpp"
#include "eps/instances.hpp"

namespace eps {

/// D = m∘Δ applied to a combination.
template <class B>
LinComb<B> D(const EpsInstance<B>& inst, const LinComb<B>& a) {
  LinComb<B> out;
  for (const auto& [b, c] : a) out.add(multiply_out(inst, inst.coproduct(b)), c);
  return out;
}

namespace detail {

/// −Σ_n (1/n!)(sign·D)ⁿ(a), stopping at the first vanishing power. The stop is
/// checked against the instance's bound rather than trusted.
template <class B>
LinComb<B> exp_series(const EpsInstance<B>& inst, const LinComb<B>& a, int sign, const char* what) {
  inst.require_nilpotent(what);
  if (!inst.weight.is_zero()) {
    throw PreconditionError(std::string(what) + " is only defined for weight 0; '" + inst.name + "' has weight " +
                            inst.weight.to_string());
  }
  std::size_t bound = 0;
  for (const auto& [b, c] : a) bound = std::max(bound, inst.nilpotency_bound(b));
  LinComb<B> out;
  LinComb<B> power = a;
  Rat coeff(-1);
  std::size_t n = 0;
  while (!power.is_zero()) {
    if (n > bound) {
      throw std::logic_error("instance '" + inst.name + "': D^" + std::to_string(n) +
                             " does not vanish although the declared nilpotency bound is " + std::to_string(bound));
    }
    out.add(power, coeff);
    power = D(inst, power);
    ++n;
    coeff = coeff * Rat(sign) * Rat(1, static_cast<long>(n));
  }
  return out;
}

}  // namespace detail

/// S = −Σ (1/n!)(−D)ⁿ with composition powers.
template <class B>
LinComb<B> antipode(const EpsInstance<B>& inst, const LinComb<B>& a) {
  return detail::exp_series(inst, a, -1, "the antipode");
}

/// T = −Σ (1/n!)Dⁿ, so that S∘T = T∘S = id.
template <class B>
LinComb<B> antipode_inverse(const EpsInstance<B>& inst, const LinComb<B>& a) {
  return detail::exp_series(inst, a, 1, "the inverse antipode");
}

/// Σ S(u₁)u₂ + S(u) + u = 0 = Σ u₁S(u₂) + u + S(u)
template <class B>
Witness check_antipode_axioms(const EpsInstance<B>& inst, const B& u) {
  const LinComb<B> lu(u);
  const auto su = antipode(inst, lu);
  LinComb<B> left = su + lu;
  LinComb<B> right = su + lu;
  for (const auto& [t, c] : inst.coproduct(u)) {
    left.add(inst.mul(antipode(inst, LinComb<B>(t.left)), LinComb<B>(t.right)), c);
    right.add(inst.mul(LinComb<B>(t.left), antipode(inst, LinComb<B>(t.right))), c);
  }
  if (!left.is_zero()) {
    return Witness::fail("S(u1)u2 + S(u) + u = " + format_lincomb(left) + " at u = " + basis_text(u));
  }
  if (!right.is_zero()) {
    return Witness::fail("u1 S(u2) + u + S(u) = " + format_lincomb(right) + " at u = " + basis_text(u));
  }
  return Witness::pass();
}

/// S(T(a)) = a = T(S(a))
template <class B>
Witness check_antipode_bijective(const EpsInstance<B>& inst, const LinComb<B>& a) {
  auto w = compare_sides("S(T(a)) = a", antipode(inst, antipode_inverse(inst, a)), a);
  if (!w) return w;
  return compare_sides("T(S(a)) = a", antipode_inverse(inst, antipode(inst, a)), a);
}

/// Convolution power with f^{∗0} = f and f^{∗(k+1)} = f^{∗k} ∗ f, so f^{∗n}
/// has n+1 factors f(c₁)⋯f(c_{n+1}).
template <class B>
class ConvPower {
 public:
  ConvPower(const EpsInstance<B>& inst, LinOp<B> f) : inst_(inst), f_(std::move(f)) {}

  LinComb<B> operator()(std::size_t n, const B& b) {
    if (memo_.size() <= n) memo_.resize(n + 1);
    auto it = memo_[n].find(b);
    if (it != memo_[n].end()) return it->second;
    LinComb<B> out;
    if (n == 0) {
      out = f_(b);
    } else {
      for (const auto& [t, c] : inst_.coproduct(b)) {
        auto l = (*this)(n - 1, t.left);
        if (l.is_zero()) continue;
        out.add(inst_.mul(l, f_(t.right)), c);
      }
    }
    memo_[n].emplace(b, out);
    return out;
  }

 private:
  const EpsInstance<B>& inst_;
  LinOp<B> f_;
  std::vector<std::unordered_map<B, LinComb<B>>> memo_;
};

template <class B>
LinComb<B> conv_power(const EpsInstance<B>& inst, const LinOp<B>& f, std::size_t n, const LinComb<B>& a) {
  ConvPower<B> power(inst, f);
  LinComb<B> out;
  for (const auto& [b, c] : a) out.add(power(n, b), c);
  return out;
}

template <class B>
LinComb<B> composition_power(const EpsInstance<B>& inst, std::size_t n, LinComb<B> a) {
  for (std::size_t i = 0; i < n && !a.is_zero(); ++i) a = D(inst, a);
  return a;
}

/// D^{∗(n+1)}(a) = 0 and D^{∘(n+1)}(a) = 0.
template <class B>
Witness check_conv_nilpotency(const EpsInstance<B>& inst, const B& a, std::size_t n) {
  const LinComb<B> la(a);
  auto conv = conv_power(inst, derivation(inst), n + 1, la);
  if (!conv.is_zero()) {
    return Witness::fail("D^{*" + std::to_string(n + 1) + "}(" + basis_text(a) + ") = " + format_lincomb(conv));
  }
  auto comp = composition_power(inst, n + 1, la);
  if (!comp.is_zero()) {
    return Witness::fail("D^" + std::to_string(n + 1) + "(" + basis_text(a) + ") = " + format_lincomb(comp));
  }
  return Witness::pass();
}

/// S(x_n) = Σ_{k=1}^{n+1} (−1)^k Σ_{strict compositions (n₁..n_k) of n+1} x_{n₁−1}⋯x_{n_k−1}, with x₀ = 1.
LinComb<Word> divided_diff_antipode_closed(std::uint32_t n);

}  // namespace eps
