#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eps/rational.hpp"

namespace eps {

inline std::size_t hash_mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

/// Basis element of a tensor product of two free modules.
template <class L, class R = L>
struct Tensor2 {
  L left;
  R right;
  friend bool operator==(const Tensor2&, const Tensor2&) = default;
};

template <class A, class B = A, class C = A>
struct Tensor3 {
  A first;
  B second;
  C third;
  friend bool operator==(const Tensor3&, const Tensor3&) = default;
};

}  // namespace eps

template <class L, class R>
struct std::hash<eps::Tensor2<L, R>> {
  std::size_t operator()(const eps::Tensor2<L, R>& t) const noexcept {
    return eps::hash_mix(std::hash<L>{}(t.left), std::hash<R>{}(t.right));
  }
};

template <class A, class B, class C>
struct std::hash<eps::Tensor3<A, B, C>> {
  std::size_t operator()(const eps::Tensor3<A, B, C>& t) const noexcept {
    std::size_t h = std::hash<A>{}(t.first);
    h = eps::hash_mix(h, std::hash<B>{}(t.second));
    return eps::hash_mix(h, std::hash<C>{}(t.third));
  }
};

namespace eps {

/// Finite formal sum of basis elements with nonzero rational coefficients.
template <class B>
class LinComb {
 public:
  using Basis = B;
  using Map = std::unordered_map<B, Rat>;
  using const_iterator = typename Map::const_iterator;

  LinComb() = default;
  LinComb(const B& b) { terms_.emplace(b, Rat(1)); }  // NOLINT(google-explicit-constructor)
  LinComb(std::initializer_list<std::pair<B, Rat>> terms) {
    for (const auto& [b, c] : terms) add(b, c);
  }

  static LinComb term(const B& b, const Rat& c) {
    LinComb r;
    r.add(b, c);
    return r;
  }

  void add(const B& b, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const LinComb& o, const Rat& scale = Rat(1)) {
    if (scale.is_zero()) return;
    for (const auto& [b, c] : o.terms_) add(b, scale.is_one() ? c : c * scale);
  }

  Rat coeff(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  LinComb& operator+=(const LinComb& o) { add(o); return *this; }
  LinComb& operator-=(const LinComb& o) { add(o, Rat(-1)); return *this; }
  LinComb& operator*=(const Rat& c) {
    if (c.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [b, v] : terms_) v *= c;
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Rat(-1); }
  friend LinComb operator*(const Rat& c, LinComb a) { return a *= c; }

  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  /// Terms sorted by a strict weak order on the basis.
  template <class Less>
  std::vector<std::pair<B, Rat>> sorted(Less less) const {
    std::vector<std::pair<B, Rat>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return less(x.first, y.first); });
    return out;
  }

 private:
  Map terms_;
};

template <class B>
LinComb<B> lc_add(const LinComb<B>& a, const LinComb<B>& b) {
  return a + b;
}

template <class B>
LinComb<B> lc_scale(const Rat& c, const LinComb<B>& a) {
  return c * a;
}

template <class L, class R>
LinComb<Tensor2<L, R>> lc_tensor(const LinComb<L>& a, const LinComb<R>& b) {
  LinComb<Tensor2<L, R>> out;
  for (const auto& [x, cx] : a) {
    for (const auto& [y, cy] : b) out.add(Tensor2<L, R>{x, y}, cx * cy);
  }
  return out;
}

/// Extends a basis-level map B -> LinComb<C> linearly.
template <class B, class F>
auto extend_linear(const LinComb<B>& a, F&& rule) {
  using Out = std::decay_t<decltype(rule(std::declval<const B&>()))>;
  Out out;
  for (const auto& [b, c] : a) out.add(rule(b), c);
  return out;
}

/// (f ⊗ g) applied to a tensor combination.
template <class L, class R, class FL, class FR>
auto tensor_apply(const LinComb<Tensor2<L, R>>& t, FL&& f, FR&& g) {
  using OL = typename std::decay_t<decltype(f(std::declval<const L&>()))>::Basis;
  using OR = typename std::decay_t<decltype(g(std::declval<const R&>()))>::Basis;
  LinComb<Tensor2<OL, OR>> out;
  for (const auto& [b, c] : t) {
    auto l = f(b.left);
    if (l.is_zero()) continue;
    auto r = g(b.right);
    for (const auto& [x, cx] : l) {
      for (const auto& [y, cy] : r) out.add(Tensor2<OL, OR>{x, y}, c * cx * cy);
    }
  }
  return out;
}

/// Linear endomap given by its action on basis elements.
template <class B>
class LinOp {
 public:
  using Rule = std::function<LinComb<B>(const B&)>;

  LinOp() : rule_([](const B&) { return LinComb<B>{}; }) {}
  explicit LinOp(Rule rule) : rule_(std::move(rule)) {}

  static LinOp zero() { return LinOp(); }
  static LinOp identity() {
    return LinOp([](const B& b) { return LinComb<B>(b); });
  }

  LinComb<B> operator()(const B& b) const { return rule_(b); }
  LinComb<B> operator()(const LinComb<B>& a) const { return extend_linear(a, rule_); }

  const Rule& rule() const { return rule_; }

 private:
  Rule rule_;
};

template <class B>
LinOp<B> op_compose(const LinOp<B>& f, const LinOp<B>& g) {
  return LinOp<B>([f, g](const B& b) { return f(g(b)); });
}

template <class B>
LinOp<B> op_add(const LinOp<B>& f, const LinOp<B>& g) {
  return LinOp<B>([f, g](const B& b) { return f(b) + g(b); });
}

template <class B>
LinOp<B> op_scale(const Rat& c, const LinOp<B>& f) {
  return LinOp<B>([c, f](const B& b) { return c * f(b); });
}

}  // namespace eps
