#include <doctest.h>

#include "eps/operated.hpp"
#include "eps/random.hpp"
#include "helpers.hpp"

using namespace eps;
using testing::as_map;
using testing::comb;
using testing::F;
using testing::labels;

namespace {

std::vector<Forest> sample(std::uint64_t seed, std::size_t count, std::size_t max_vertices) {
  Rng rng(seed);
  const RandomForestGen gen(labels());
  std::vector<Forest> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen.forest(rng, 0, max_vertices));
  return out;
}

bool has_omega(const Forest& f) {
  for (const auto& n : f.nodes()) {
    if (n.dec.kind == DecorationKind::Omega) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("identity target evaluates every forest to itself") {
  const auto t = identity_target(labels());
  for (const auto& f : sample(1, 60, 7)) CHECK(evaluate(f, t) == ForestComb(f));
  CHECK(check_operated_morphism(t, std::span<const Forest>(sample(2, 60, 6)), labels()).ok);
}

TEST_CASE("relabeling target") {
  const auto t = relabel_target(labels(), {{"x", "y"}});
  CHECK(evaluate(F("a(x)"), t) == ForestComb(F("a(y)")));
  CHECK(evaluate(Forest{}, t) == ForestComb(Forest{}));
  CHECK(evaluate(F("x b(z x)"), t) == ForestComb(F("y b(z y)")));
  const auto s = sample(3, 200, 7);
  CHECK(check_operated_morphism(t, std::span<const Forest>(s), labels()).ok);
  CHECK(check_hopf_morphism_compat(t, std::span<const Forest>(s)).ok);
  CHECK(check_target_cocycle(t, std::span<const Forest>(s), labels()).ok);
  const auto source = forest_instance();
  const auto x = F("x");
  const auto expected = ForestComb(Forest{}) - ForestComb(F("y"));
  CHECK(antipode(t.carrier, evaluate(x, t)) == expected);
  CHECK(evaluate(antipode(source, ForestComb(x)), t) == expected);
  CHECK(antipode(t.carrier, evaluate(Forest{}, t)) == -ForestComb(Forest{}));
  const auto swap = relabel_target(labels(), {{"a", "b"}, {"b", "a"}});
  CHECK(evaluate(F("a(b(x))"), swap) == ForestComb(F("b(a(x))")));
  CHECK_THROWS_AS(relabel_target(labels(), {{"a", "x"}}), std::invalid_argument);
  CHECK_THROWS_AS(relabel_target(labels(), {{"q", "x"}}), std::invalid_argument);
}

TEST_CASE("collapse target keeps exactly the forests without operator vertices") {
  const auto t = collapse_target(labels());
  const auto s = sample(4, 200, 7);
  for (const auto& f : s) {
    CHECK(evaluate(f, t) == (has_omega(f) ? ForestComb{} : ForestComb(Forest{})));
  }
  auto phi = [&](const Forest& f) { return evaluate(f, t); };
  CHECK(check_multiplicative(t, phi, std::span<const Forest>(s)).ok);
  CHECK(check_intertwining(t, phi, std::span<const Forest>(s), labels()).ok);
  // f(x) = 1 cannot satisfy Δ(f(x)) = 1⊗1 in a weight-0 unitary carrier, where Δ(1) = 0.
  const auto cocycle = check_target_cocycle(t, std::span<const Forest>(s), labels());
  CHECK_FALSE(cocycle.ok);
  CHECK(cocycle.detail.find("image of x") != std::string::npos);
  const std::vector<Forest> leaf{F("x")};
  CHECK_FALSE(check_delta_compat(t, phi, std::span<const Forest>(leaf)).ok);
  CHECK_FALSE(check_hopf_morphism_compat(t, std::span<const Forest>(leaf)).ok);
}

TEST_CASE("broken target is rejected with the first failing forest") {
  const auto t = broken_target(labels());
  const std::vector<Forest> s{F("x y"), F("a"), F("b(x)")};
  const auto w = check_operated_morphism(t, std::span<const Forest>(s), labels());
  CHECK_FALSE(w.ok);
  CHECK(w.detail.find("coproduct compatibility at a:") != std::string::npos);
  const auto c = check_target_cocycle(t, std::span<const Forest>(s), labels());
  CHECK_FALSE(c.ok);
  CHECK(c.detail.find("cocycle condition of a at the image of x y") != std::string::npos);
}

TEST_CASE("a map deviating on one generator is not the evaluation") {
  const auto t = relabel_target(labels(), {{"x", "y"}});
  const auto s = sample(5, 50, 6);
  auto phi = [&](const Forest& f) { return evaluate(f, t); };
  CHECK(check_candidate_morphism(t, phi, std::span<const Forest>(s), labels()).ok);
  auto deviant_target = t;
  deviant_target.generators["z"] = ForestComb(F("x"));
  auto deviant = [&](const Forest& f) { return evaluate(f, deviant_target); };
  const auto w = check_candidate_morphism(t, deviant, std::span<const Forest>(s), labels());
  CHECK_FALSE(w.ok);
  CHECK(w.detail.find("generator z") != std::string::npos);
}

TEST_CASE("divided differences with zero operators") {
  const auto t = divdiff_zero_target(labels());
  CHECK(evaluate(F("x y"), t) == LinComb<Word>(Word{{1, 1}}));
  CHECK(evaluate(F("x a(y)"), t).is_zero());
  CHECK(evaluate(Forest{}, t) == LinComb<Word>(Word{}));
  const auto s = sample(6, 100, 6);
  auto phi = [&](const Forest& f) { return evaluate(f, t); };
  CHECK(check_multiplicative(t, phi, std::span<const Forest>(s)).ok);
  CHECK(check_intertwining(t, phi, std::span<const Forest>(s), labels()).ok);
}

TEST_CASE("missing bindings and target presets") {
  const auto t = identity_target(eps::Alphabets({"x"}, {"a"}));
  CHECK_THROWS_AS(evaluate(F("y"), t), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(F("b(x)"), t), std::invalid_argument);
  CHECK(parse_forest_target("identity", labels()).name == "identity");
  CHECK(parse_forest_target("collapse", labels()).name == "collapse");
  CHECK(parse_forest_target("broken", labels()).name == "broken");
  CHECK(evaluate(F("a(x)"), parse_forest_target("relabel:x=y,a=b", labels())) == ForestComb(F("b(y)")));
  CHECK_THROWS_AS(parse_forest_target("relabel:", labels()), std::invalid_argument);
  CHECK_THROWS_AS(parse_forest_target("relabel:x", labels()), std::invalid_argument);
  CHECK_THROWS_AS(parse_forest_target("other", labels()), std::invalid_argument);
}

TEST_CASE("empty X and a single operator label") {
  const eps::Alphabets only_omega({}, {"a"});
  const auto t = identity_target(only_omega);
  const RandomForestGen gen(only_omega);
  Rng rng(8);
  std::vector<Forest> s;
  for (int i = 0; i < 40; ++i) s.push_back(gen.forest(rng, 0, 6));
  CHECK(check_operated_morphism(t, std::span<const Forest>(s), only_omega).ok);
  CHECK(check_hopf_morphism_compat(t, std::span<const Forest>(s)).ok);
}
