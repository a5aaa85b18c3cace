#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "eps/forest.hpp"
#include "eps/freemod.hpp"
#include "eps/instances.hpp"

namespace eps {

/// Seeded generator. Bounded draws use rejection sampling on the raw 64-bit
/// stream, so sequences are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// Random decorated forests. The vertex count is uniform in [min, max]; the
/// first tree takes a uniform share of the vertices and the rest recurse.
/// Leaves draw uniformly from X ∪ Ω, internal vertices from Ω.
class RandomForestGen {
 public:
  explicit RandomForestGen(Alphabets alphabets) : alphabets_(std::move(alphabets)) {}

  Forest forest(Rng& rng, std::size_t min_vertices, std::size_t max_vertices) const;
  Forest forest_of_size(Rng& rng, std::size_t n) const;
  /// 1 to 3 terms with small nonzero rational coefficients.
  LinComb<Forest> lincomb(Rng& rng, std::size_t max_vertices) const;

  const Alphabets& alphabets() const { return alphabets_; }

 private:
  void append_forest(Rng& rng, std::size_t n, std::vector<Forest::Node>& out) const;
  Alphabets alphabets_;
};

/// Every decorated forest with exactly n vertices.
std::vector<Forest> enumerate_forests(const Alphabets& alphabets, std::size_t n);

/// Small nonzero rational p/q with |p| ≤ 5, 1 ≤ q ≤ 3.
Rat random_coefficient(Rng& rng);

Monomial random_monomial(Rng& rng, std::uint32_t max_exponent);
/// Word of total degree at most max_degree.
Word random_word(Rng& rng, std::uint32_t max_degree);
/// Path of length at most max_length following random outgoing arrows.
Path random_path(Rng& rng, const QuiverSpec& q, std::size_t max_length);

/// The 4-vertex quiver used by tests and the default quiver instance:
/// v0→v1→v2→v3, a loop at v1 and a shortcut v0→v2.
QuiverSpec test_quiver();

}  // namespace eps
