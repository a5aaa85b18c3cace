#include <doctest.h>

#include "eps/antipode.hpp"
#include "eps/checks.hpp"
#include "eps/instances.hpp"
#include "eps/random.hpp"
#include "helpers.hpp"

using namespace eps;
using testing::as_map;
using testing::tensor;

namespace {

using M = Monomial;

std::vector<Word> words_up_to(std::uint32_t degree) {
  std::vector<Word> out = {Word{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Word w = out[i];
    for (std::uint32_t l = 1; w.degree() + l <= degree; ++l) {
      Word v = w;
      v.letters.push_back(l);
      out.push_back(v);
    }
  }
  return out;
}

std::vector<Path> paths_up_to(const QuiverSpec& q, std::size_t length) {
  std::vector<Path> out;
  for (const auto& v : q.vertices) out.push_back(trivial_path(q, v));
  std::vector<std::vector<std::string>> frontier;
  for (const auto& a : q.arrows) frontier.push_back({a.name});
  while (!frontier.empty()) {
    std::vector<std::vector<std::string>> next;
    for (const auto& names : frontier) {
      out.push_back(make_path(q, names));
      if (names.size() == length) continue;
      const auto& last = q.arrows[*q.arrow_index(names.back())];
      for (const auto& a : q.arrows) {
        if (a.source == last.target) {
          auto longer = names;
          longer.push_back(a.name);
          next.push_back(longer);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

Path P(const QuiverSpec& q, std::vector<std::string> arrows) { return make_path(q, arrows); }

}  // namespace

TEST_CASE("k[x] coproduct matches the closed formula") {
  for (const Rat& lambda : {Rat(0), Rat(1), Rat(-1), Rat(3, 2)}) {
    const auto inst = poly_instance(lambda);
    for (std::uint32_t n = 0; n <= 8; ++n) {
      std::map<std::pair<int, int>, Rat> lib;
      for (const auto& [t, c] : inst.coproduct(M{n})) lib[{int(t.left.exponent), int(t.right.exponent)}] = c;
      CHECK(lib == oracle::poly_coproduct(static_cast<int>(n), lambda));
    }
  }
  const auto one = poly_instance(Rat(1));
  CHECK(as_map(one.coproduct(M{1})) == tensor({{"1", "1"}}));
  CHECK(as_map(one.coproduct(M{2})) == tensor({{"1", "x"}, {"x", "1"}, {"x", "x"}}));
  CHECK(as_map(poly_instance(Rat(0)).coproduct(M{0})).empty());
  CHECK(poly_instance(Rat(3, 2)).coproduct(M{0}).coeff(Tensor2<M>{M{0}, M{0}}) == Rat(-3, 2));
}

TEST_CASE("k[x] compatibility at weight 2 on x, x") {
  const auto inst = poly_instance(Rat(2));
  CHECK(check_compat(inst, M{1}, M{1}).ok);
  const auto lhs = inst.coproduct(M{2});
  CHECK(lhs.coeff(Tensor2<M>{M{1}, M{1}}) == Rat(2));
  CHECK(lhs.size() == 3);
}

TEST_CASE("k[x] passes coassociativity and compatibility on monomials to x^8") {
  for (const Rat& lambda : {Rat(0), Rat(1), Rat(-1), Rat(3, 2)}) {
    const auto inst = poly_instance(lambda);
    for (std::uint32_t m = 0; m <= 8; ++m) {
      CHECK(check_coassoc(inst, M{m}).ok);
      for (std::uint32_t n = 0; m + n <= 8; ++n) CHECK(check_compat(inst, M{m}, M{n}).ok);
    }
  }
  // Unit: both sides of coassociativity are λ²(1⊗1⊗1).
  const auto inst = poly_instance(Rat(3, 2));
  auto [l, r] = coassoc_sides(inst.coproduct(M{0}), inst.coproduct);
  CHECK(l.coeff(Tensor3<M>{M{0}, M{0}, M{0}}) == Rat(9, 4));
  CHECK(l == r);
}

TEST_CASE("divided differences") {
  const auto inst = divided_diff_instance();
  CHECK(as_map(inst.coproduct(Word{{1}})) == tensor({{"1", "1"}}));
  CHECK(as_map(inst.coproduct(Word{{2}})) == tensor({{"1", "x1"}, {"x1", "1"}}));
  CHECK(as_map(inst.coproduct(Word{{3}})) == tensor({{"1", "x2"}, {"x1", "x1"}, {"x2", "1"}}));
  CHECK(as_map(inst.coproduct(Word{{1, 1}})) == tensor({{"x1", "1"}, {"1", "x1"}}));
  CHECK(inst.coproduct(Word{}).is_zero());
  for (const auto& a : words_up_to(6)) {
    CHECK(check_coassoc(inst, a).ok);
    CHECK(inst.nilpotency_bound(a) == a.degree());
    for (const auto& b : words_up_to(6 - static_cast<std::uint32_t>(a.degree()))) CHECK(check_compat(inst, a, b).ok);
  }
}

TEST_CASE("quiver path algebra") {
  const auto q = test_quiver();
  const auto inst = quiver_instance(q);
  CHECK_FALSE(inst.unitary());
  CHECK(inst.coproduct(trivial_path(q, "v1")).is_zero());
  CHECK(as_map(inst.coproduct(P(q, {"p"}))) == tensor({{"v0", "v1"}}));
  CHECK(as_map(inst.coproduct(P(q, {"p", "q"}))) == tensor({{"v0", "q"}, {"p", "v2"}}));
  CHECK(as_map(inst.coproduct(P(q, {"p", "q", "r"}))) == tensor({{"v0", "q r"}, {"p q", "v3"}, {"p", "r"}}));
  CHECK(as_map(inst.coproduct(P(q, {"p", "l", "q", "r"}))) ==
        tensor({{"v0", "l q r"}, {"p l q", "v3"}, {"p", "q r"}, {"p l", "r"}}));
  CHECK(path_product(q, P(q, {"p"}), P(q, {"r"})).is_zero());
  CHECK(path_product(q, P(q, {"p"}), P(q, {"q"})) == LinComb<Path>(P(q, {"p", "q"})));
  CHECK(path_product(q, trivial_path(q, "v0"), P(q, {"p"})) == LinComb<Path>(P(q, {"p"})));
  CHECK(path_product(q, trivial_path(q, "v1"), P(q, {"p"})).is_zero());
  CHECK(path_source(q, P(q, {"p", "q"})) == "v0");
  CHECK(path_target(q, P(q, {"p", "q"})) == "v2");
  CHECK_THROWS_AS(make_path(q, {"p", "r"}), std::invalid_argument);
  CHECK_THROWS_AS(trivial_path(q, "nowhere"), std::invalid_argument);
  const auto paths = paths_up_to(q, 5);
  for (const auto& a : paths) {
    CHECK(check_coassoc(inst, a).ok);
    CHECK(inst.nilpotency_bound(a) == a.length());
  }
  for (const auto& a : paths) {
    if (a.length() > 2) continue;
    for (const auto& b : paths) {
      if (b.length() <= 3) CHECK(check_compat(inst, a, b).ok);
    }
  }
}

TEST_CASE("quiver specification from JSON") {
  const auto q = QuiverSpec::from_json_text(
      R"({"vertices":["u","v"],"arrows":[{"name":"e","src":"u","tgt":"v"}]})");
  CHECK(q.vertices.size() == 2);
  CHECK(q.arrows[0].target == 1);
  CHECK_THROWS_AS(QuiverSpec::from_json_text(R"({"vertices":["u"],"arrows":[{"name":"e","src":"u","tgt":"v"}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(QuiverSpec::from_json_text(R"({"vertices":["u","u"],"arrows":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(QuiverSpec::from_json_text("[1,2"), std::invalid_argument);
}

TEST_CASE("weight -1 forest coproduct") {
  const eps::Alphabets one({}, {"a"});
  auto G = [&](const std::string& s) { return eps::parse_forest(s, one); };
  const auto inst = foissy_instance();
  CHECK(as_map(inst.coproduct(Forest{})) == tensor({{"1", "1"}}));
  CHECK(as_map(inst.coproduct(G("a"))) == tensor({{"a", "1"}, {"1", "a"}}));
  CHECK(as_map(inst.coproduct(G("a(a)"))) == tensor({{"a(a)", "1"}, {"a", "a"}, {"1", "a(a)"}}));
  CHECK(as_map(inst.coproduct(G("a a(a)"))) ==
        tensor({{"a a(a)", "1"}, {"a a", "a"}, {"a", "a(a)"}, {"1", "a a(a)"}}));
  CHECK(as_map(inst.coproduct(G("a(a a(a))"))) ==
        tensor({{"a(a a(a))", "1"}, {"a a(a)", "a"}, {"a a", "a(a)"}, {"a", "a(a(a))"}, {"1", "a(a a(a))"}}));
  CHECK_FALSE(inst.nilpotent());
  CHECK_THROWS_AS(antipode(inst, LinComb<Forest>(G("a"))), PreconditionError);
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& f : enumerate_forests(one, n)) {
      CHECK(check_coassoc(inst, f).ok);
      for (std::size_t m = 0; m + n <= 5; ++m) {
        for (const auto& g : enumerate_forests(one, m)) CHECK(check_compat(inst, f, g).ok);
      }
    }
  }
}

TEST_CASE("trivial instance") {
  const auto inst = trivial_forest_instance();
  const auto a = LinComb<Forest>(testing::F("a(x) y")) + LinComb<Forest>(Forest{});
  CHECK(inst.delta(a).is_zero());
  CHECK(antipode(inst, a) == -a);
  CHECK(check_compat(inst, testing::F("x"), testing::F("a")).ok);
  CHECK(check_coassoc(inst, testing::F("x")).ok);
}
