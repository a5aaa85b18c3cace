#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <functional>
#include <string>
#include <vector>

#include "eps/forest.hpp"
#include "eps/freemod.hpp"
#include "eps/instance.hpp"

namespace eps {

/// x^n, basis of k[x].
struct Monomial {
  std::uint32_t exponent = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Word x_{i1}⋯x_{im} in k⟨x1, x2, …⟩ with every index ≥ 1; the empty word is 1.
struct Word {
  std::vector<std::uint32_t> letters;
  std::uint64_t degree() const;
  friend bool operator==(const Word&, const Word&) = default;
};

/// Finite quiver. Vertex and arrow names share one namespace.
struct QuiverSpec {
  struct Arrow {
    std::string name;
    std::uint32_t source = 0;
    std::uint32_t target = 0;
  };
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  /// Parses {"vertices":[...], "arrows":[{"name","src","tgt"}...]}.
  static QuiverSpec from_json_text(const std::string& text);
  /// Throws std::invalid_argument if names clash or endpoints are unknown.
  void validate() const;

  std::optional<std::uint32_t> vertex_index(std::string_view name) const;
  std::optional<std::uint32_t> arrow_index(std::string_view name) const;
};

/// Either the trivial path at a vertex (arrows empty) or a composable arrow sequence.
struct Path {
  std::string vertex;  // set only for trivial paths
  std::vector<std::string> arrows;

  bool trivial() const { return arrows.empty(); }
  std::size_t length() const { return arrows.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

}  // namespace eps

template <>
struct std::hash<eps::Monomial> {
  std::size_t operator()(const eps::Monomial& m) const noexcept { return std::hash<std::uint32_t>{}(m.exponent); }
};

template <>
struct std::hash<eps::Word> {
  std::size_t operator()(const eps::Word& w) const noexcept {
    std::size_t h = 0x3c6ef372;
    for (auto l : w.letters) h = eps::hash_mix(h, l);
    return h;
  }
};

template <>
struct std::hash<eps::Path> {
  std::size_t operator()(const eps::Path& p) const noexcept {
    std::size_t h = p.trivial() ? eps::hash_mix(0x1f, std::hash<std::string>{}(p.vertex)) : 0xa5;
    for (const auto& a : p.arrows) h = eps::hash_mix(h, std::hash<std::string>{}(a));
    return h;
  }
};

namespace eps {

/// k[x] with Δ(1) = −λ(1⊗1), Δ(x) = 1⊗1, extended by the weighted derivation rule:
/// Δ(xⁿ) = Σ_{i<n} xⁱ⊗x^{n−1−i} + λ Σ_{0<i<n} xⁱ⊗x^{n−i}.
EpsInstance<Monomial> poly_instance(const Rat& lambda);

/// k⟨x1, x2, …⟩ with Δ(x_n) = Σ_{i<n} x_i⊗x_{n−1−i} (x0 = 1), weight 0.
EpsInstance<Word> divided_diff_instance();

/// Path algebra kQ with the weight-0 coproduct; not unitary.
EpsInstance<Path> quiver_instance(const QuiverSpec& q);

/// Planar forests with Δ(1) = 1⊗1, Δ(B⁺F̄) = F⊗1 + (id⊗B⁺)Δ(F̄) and
/// Δ(F1F2) = F1·Δ(F2) + Δ(F1)·F2 − F1⊗F2 (weight −1). Every vertex is read as
/// a grafting of its children; use a single Ω-label for the undecorated case.
EpsInstance<Forest> foissy_instance();

/// Any unitary algebra with Δ = 0 (weight 0). D = 0, so S = −id.
template <class B>
EpsInstance<B> trivial_instance(std::string name, typename EpsInstance<B>::Product product, B unit) {
  EpsInstance<B> inst;
  inst.name = std::move(name);
  inst.product = std::move(product);
  inst.unit = std::move(unit);
  inst.coproduct = [](const B&) { return LinComb<Tensor2<B>>{}; };
  inst.weight = Rat(0);
  inst.nilpotency_bound = [](const B&) { return std::size_t{0}; };
  return inst;
}

/// The trivial instance on forests with concatenation.
EpsInstance<Forest> trivial_forest_instance();

/// Path product: concatenation when composable, else 0.
LinComb<Path> path_product(const QuiverSpec& q, const Path& p1, const Path& p2);
std::string path_source(const QuiverSpec& q, const Path& p);
std::string path_target(const QuiverSpec& q, const Path& p);
/// Builds a path from arrow names; throws std::invalid_argument if not composable.
Path make_path(const QuiverSpec& q, const std::vector<std::string>& arrow_names);
Path trivial_path(const QuiverSpec& q, std::string_view vertex);

}  // namespace eps
