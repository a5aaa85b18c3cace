#include <doctest.h>

#include <limits>
#include <set>

#include "eps/random.hpp"
#include "helpers.hpp"

using namespace eps;
using testing::labels;

namespace {

// Trees of size n: a leaf label, or an Ω root over a forest of size n-1.
std::vector<std::uint64_t> forest_counts(std::uint64_t leaf_labels, std::uint64_t omega_labels, std::size_t max_n) {
  std::vector<std::uint64_t> trees(max_n + 1, 0), forests(max_n + 1, 0);
  forests[0] = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    trees[n] = n == 1 ? leaf_labels : omega_labels * forests[n - 1];
    for (std::size_t k = 1; k <= n; ++k) forests[n] += trees[k] * forests[n - k];
  }
  return forests;
}

}  // namespace

TEST_CASE("raw stream is the standard 64-bit Mersenne Twister") {
  Rng rng(5489);
  std::uint64_t v = 0;
  for (int i = 0; i < 10000; ++i) v = rng.below(std::numeric_limits<std::uint64_t>::max());
  CHECK(v == 9981545732273789042ULL);
}

TEST_CASE("bounded draws stay in range and cover it") {
  Rng rng(1);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto v = rng.between(3, 9);
    REQUIRE(v >= 3);
    REQUIRE(v <= 9);
    seen.insert(v);
  }
  CHECK(seen.size() == 7);
}

TEST_CASE("generation is a function of the seed") {
  const RandomForestGen gen(labels());
  Rng a(77), b(77), c(78);
  std::vector<std::string> first, second, other;
  for (int i = 0; i < 50; ++i) {
    first.push_back(gen.forest(a, 0, 8).to_string());
    second.push_back(gen.forest(b, 0, 8).to_string());
    other.push_back(gen.forest(c, 0, 8).to_string());
  }
  CHECK(first == second);
  CHECK(first != other);
}

TEST_CASE("random forests respect the vertex bounds and the label kinds") {
  const RandomForestGen gen(labels());
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto f = gen.forest(rng, 2, 9);
    REQUIRE(f.vertex_count() >= 2);
    REQUIRE(f.vertex_count() <= 9);
    for (const auto& n : f.nodes()) {
      if (n.size > 1) REQUIRE(n.dec.kind == DecorationKind::Omega);
    }
  }
  for (std::size_t n = 0; n <= 6; ++n) CHECK(gen.forest_of_size(rng, n).vertex_count() == n);
  for (int i = 0; i < 100; ++i) {
    const auto c = random_coefficient(rng);
    CHECK_FALSE(c.is_zero());
    CHECK(random_word(rng, 5).degree() <= 5);
    CHECK(random_monomial(rng, 4).exponent <= 4);
  }
}

TEST_CASE("random paths are composable") {
  const auto q = test_quiver();
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_path(rng, q, 5);
    CHECK(p.length() <= 5);
    if (!p.trivial()) CHECK(make_path(q, p.arrows) == p);
  }
}

TEST_CASE("enumeration matches the counting recursion and has no repeats") {
  const auto two = eps::Alphabets({"x", "y"}, {"a", "b"});
  const auto counts = forest_counts(4, 2, 6);
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto all = enumerate_forests(two, n);
    CHECK(all.size() == counts[n]);
    std::set<std::string> distinct;
    for (const auto& f : all) {
      CHECK(f.vertex_count() == n);
      distinct.insert(f.to_string());
    }
    CHECK(distinct.size() == all.size());
  }
  CHECK(counts[1] == 4);
  CHECK(counts[2] == 4 * 4 + 2 * 4);
  const auto only_omega = eps::Alphabets({}, {"a"});
  const auto catalan = forest_counts(1, 1, 7);
  for (std::size_t n = 0; n <= 7; ++n) CHECK(enumerate_forests(only_omega, n).size() == catalan[n]);
  CHECK(catalan[7] == 429);
}
