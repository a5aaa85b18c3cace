// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "eps/antipode.hpp"
#include "eps/checks.hpp"
#include "eps/coproduct.hpp"
#include "eps/instances.hpp"
#include "eps/operated.hpp"
#include "eps/prelie.hpp"
#include "eps/random.hpp"
#include "eps/textio.hpp"
#include "helpers.hpp"

using namespace eps;
using testing::as_map;
using testing::F;
using testing::labels;
using testing::tensor;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::size_t checks = 0;

  // Records one comparison; keeps the first failure.
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void expect(const Witness& w, const std::string& where = "") {
    expect(w.ok, where.empty() ? w.detail : where + ": " + w.detail);
  }
};

const eps::Alphabets& two() {
  static const eps::Alphabets a({"x", "y"}, {"a", "b"});
  return a;
}

std::vector<Forest> all_forests(const eps::Alphabets& a, std::size_t max_n) {
  std::vector<Forest> out;
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (auto& f : enumerate_forests(a, n)) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Forest> random_forests(std::uint64_t seed, std::size_t count, std::size_t min_v, std::size_t max_v,
                                   const eps::Alphabets& a = labels()) {
  Rng rng(seed);
  const RandomForestGen gen(a);
  std::vector<Forest> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen.forest(rng, min_v, max_v));
  return out;
}

oracle::Comb ones(std::initializer_list<std::string> forests) {
  oracle::Comb out;
  for (const auto& f : forests) out[f] += Rat(1);
  return out;
}

// Σ_k F|I_k ⊗ F|V∖(I_k ⊔ {v_k}) from the biideal list and the restriction map.
oracle::Tensor restriction_expansion(const Forest& f) {
  const auto order = vertex_order(f);
  const auto ideals = proper_biideals(f);
  oracle::Tensor out;
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    std::set<VertexId> drop(ideals[k].begin(), ideals[k].end());
    drop.insert(order[k]);
    std::vector<VertexId> rest;
    for (const auto& v : vertices(f)) {
      if (!drop.count(v)) rest.push_back(v);
    }
    out[{restrict(f, ideals[k]).to_string(), restrict(f, rest).to_string()}] += Rat(1);
  }
  return out;
}

std::vector<std::set<std::string>> biideal_labels(const Forest& f) {
  std::vector<std::set<std::string>> out;
  for (const auto& ideal : proper_biideals(f)) {
    std::set<std::string> names;
    for (const auto& v : ideal) names.insert(decoration_at(f, v).name());
    out.push_back(names);
  }
  return out;
}

Outcome golden() {
  Outcome o;
  const auto cop = forest_instance();
  auto delta = [&](const std::string& s) { return as_map(cop.coproduct(F(s))); };
  o.expect(delta("a") == tensor({{"1", "1"}}), "coproduct of a");
  o.expect(delta("a(x)") == tensor({{"x", "1"}, {"1", "a"}}), "coproduct of a(x)");
  o.expect(delta("b a(x)") == tensor({{"b x", "1"}, {"b", "a"}, {"1", "a(x)"}}), "coproduct of b a(x)");
  o.expect(delta("w(b a(x))") == tensor({{"b a(x)", "1"}, {"b x", "w"}, {"b", "w(a)"}, {"1", "w(a(x))"}}),
           "coproduct of w(b a(x))");

  const auto foissy = foissy_instance();
  const eps::Alphabets one({}, {"a"});
  auto fdelta = [&](const std::string& s) { return as_map(foissy.coproduct(F(s, one))); };
  o.expect(fdelta("a") == tensor({{"a", "1"}, {"1", "a"}}), "weight -1 coproduct of a");
  o.expect(fdelta("a(a)") == tensor({{"a(a)", "1"}, {"a", "a"}, {"1", "a(a)"}}), "weight -1 coproduct of a(a)");
  o.expect(fdelta("a a(a)") == tensor({{"a a(a)", "1"}, {"a a", "a"}, {"a", "a(a)"}, {"1", "a a(a)"}}),
           "weight -1 coproduct of a a(a)");
  o.expect(fdelta("a(a a(a))") ==
               tensor({{"a(a a(a))", "1"}, {"a a(a)", "a"}, {"a a", "a(a)"}, {"a", "a(a(a))"}, {"1", "a(a a(a))"}}),
           "weight -1 coproduct of a(a a(a))");

  const auto list = biideal_labels(F("a(b g)"));
  o.expect(list == std::vector<std::set<std::string>>{{}, {"b"}, {"b", "g"}}, "biideals of a(b g)");

  o.expect(biideal_labels(F("b a(x)")) == std::vector<std::set<std::string>>{{}, {"b"}, {"b", "x"}},
           "biideals of b a(x)");
  o.expect(restriction_expansion(F("b a(x)")) == tensor({{"1", "a(x)"}, {"b", "a"}, {"b x", "1"}}),
           "restriction expansion of b a(x)");
  o.expect(biideal_labels(F("w(b a(x))")) == std::vector<std::set<std::string>>{{}, {"b"}, {"b", "x"}, {"a", "b", "x"}},
           "biideals of w(b a(x))");
  o.expect(restriction_expansion(F("w(b a(x))")) ==
               tensor({{"1", "w(a(x))"}, {"b", "w(a)"}, {"b x", "w"}, {"b a(x)", "1"}}),
           "restriction expansion of w(b a(x))");

  for (const Rat& lambda : {Rat(0), Rat(1), Rat(-1), Rat(3, 2)}) {
    const auto poly = poly_instance(lambda);
    for (std::uint32_t n = 0; n <= 5; ++n) {
      std::map<std::pair<int, int>, Rat> lib;
      for (const auto& [t, c] : poly.coproduct(Monomial{n})) lib[{int(t.left.exponent), int(t.right.exponent)}] = c;
      o.expect(lib == oracle::poly_coproduct(static_cast<int>(n), lambda),
               "k[x] coproduct of x^" + std::to_string(n) + " at weight " + lambda.to_string());
    }
  }

  const auto q = test_quiver();
  const auto quiver = quiver_instance(q);
  o.expect(quiver.coproduct(trivial_path(q, "v1")).is_zero(), "quiver coproduct of v1");
  o.expect(as_map(quiver.coproduct(make_path(q, {"p"}))) == tensor({{"v0", "v1"}}), "quiver coproduct of p");
  o.expect(as_map(quiver.coproduct(make_path(q, {"p", "q"}))) == tensor({{"v0", "q"}, {"p", "v2"}}),
           "quiver coproduct of p q");
  o.expect(as_map(quiver.coproduct(make_path(q, {"p", "l"}))) == tensor({{"v0", "l"}, {"p", "v1"}}),
           "quiver coproduct of p l");

  const ForestComb f1(F("x")), f2(F("a(b)")), f3(F("g w(y)"));
  const auto pl = [&](const ForestComb& a, const ForestComb& b) { return prelie(cop, a, b); };
  o.expect(as_map(pl(f1, f2)) == ones({"x a", "b x"}), "x > a(b)");
  o.expect(as_map(pl(f2, f3)) == ones({"a(b) w(y)", "g a(b) w", "g y a(b)"}), "a(b) > g w(y)");
  const auto left = pl(pl(f1, f2), f3);
  const auto right = pl(f1, pl(f2, f3));
  o.expect(as_map(left) == ones({"x a w(y)", "b x w(y)", "g x a w", "g b x w", "g y x a", "g y b x"}),
           "(x > a(b)) > g w(y)");
  o.expect(as_map(right) == ones({"x a w(y)", "b x w(y)", "a(b) x w", "a(b) y x", "x a(b) w", "g x a w", "g b x w",
                                  "g a(b) x", "x y a(b)", "g x a(b)", "g y x a", "g y b x"}),
           "x > (a(b) > g w(y))");
  o.expect(as_map(right - left) == ones({"a(b) x w", "x a(b) w", "a(b) y x", "x y a(b)", "g a(b) x", "g x a(b)"}),
           "associator of (x, a(b), g w(y))");
  const auto assoc = [&](const ForestComb& a, const ForestComb& b, const ForestComb& c) {
    return pl(pl(a, b), c) - pl(a, pl(b, c));
  };
  o.expect(assoc(f1, f2, f3) == assoc(f2, f1, f3), "symmetric associator");
  o.expect(bracket(cop, f1, f2) == pl(f1, f2) - pl(f2, f1), "bracket of x, a(b)");
  o.expect(as_map(bracket(cop, f1, f2)) == testing::comb({{"x a", Rat(1)}, {"b x", Rat(1)}, {"a(b)", Rat(-1)}}),
           "bracket value of x, a(b)");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto xs = testing::x_set(two());
  auto compare = [&](const Forest& f) {
    const auto lib = as_map(forest_coproduct(f));
    o.expect(lib == as_map(forest_coproduct_recursive(f)), "library recursion at " + f.to_string());
    o.expect(lib == oracle::coproduct_recursive(testing::O(f), xs), "reference recursion at " + f.to_string());
  };
  for (const auto& f : all_forests(two(), 6)) compare(f);
  for (const auto& f : random_forests(2, 200, 0, 9, two())) compare(f);
  return o;
}

Outcome bialgebra_laws() {
  Outcome o;
  const auto inst = forest_instance();
  Rng rng(3);
  const RandomForestGen gen(labels());
  for (int i = 0; i < 200; ++i) {
    const auto a = gen.forest(rng, 0, 7);
    const auto b = gen.forest(rng, 0, 7);
    o.expect(check_coassoc(inst, a));
    o.expect(check_compat(inst, a, b));
  }
  for (int i = 0; i < 100; ++i) {
    const Rat lambda = rng.below(4) == 0 ? Rat(0) : random_coefficient(rng);
    const auto m = random_monomial(rng, 8);
    const auto n = random_monomial(rng, 8);
    o.expect(check_compat(poly_instance(lambda), m, n), "weight " + lambda.to_string());
  }
  return o;
}

Outcome cocycle() {
  Outcome o;
  for (const auto& f : random_forests(4, 100, 0, 8)) {
    for (const auto& w : labels().omega_labels()) o.expect(check_cocycle(labels().omega(w), ForestComb(f)));
  }
  return o;
}

Outcome nilpotency() {
  Outcome o;
  const auto inst = forest_instance();
  for (const auto& f : all_forests(two(), 5)) o.expect(check_conv_nilpotency(inst, f, f.vertex_count()));
  for (const auto& f : random_forests(5, 100, 6, 9)) o.expect(check_conv_nilpotency(inst, f, f.vertex_count()));
  return o;
}

Outcome antipode_laws() {
  Outcome o;
  const auto inst = forest_instance();
  auto sample = all_forests(two(), 5);
  for (auto& f : random_forests(6, 100, 0, 7)) sample.push_back(std::move(f));
  for (const auto& f : sample) {
    o.expect(check_antipode_axioms(inst, f));
    o.expect(check_antipode_bijective(inst, ForestComb(f)));
  }
  const auto dd = divided_diff_instance();
  for (std::uint32_t n = 1; n <= 8; ++n) {
    o.expect(divided_diff_antipode_closed(n) == antipode(dd, LinComb<Word>(Word{{n}})),
             "closed-form antipode of x" + std::to_string(n));
  }
  return o;
}

Outcome prelie_laws() {
  Outcome o;
  Rng rng(7);
  const RandomForestGen gen(labels());
  const auto forests = forest_instance();
  for (int i = 0; i < 200; ++i) {
    const auto a = gen.lincomb(rng, 3), b = gen.lincomb(rng, 3), c = gen.lincomb(rng, 3);
    o.expect(check_prelie_identity(forests, a, b, c));
    o.expect(check_jacobi(forests, a, b, c));
  }
  for (const Rat& lambda : {Rat(0), Rat(1), Rat(-1)}) {
    const auto poly = poly_instance(lambda);
    for (int i = 0; i < 200; ++i) {
      LinComb<Monomial> a, b, c;
      for (auto* v : {&a, &b, &c}) {
        v->add(random_monomial(rng, 5), random_coefficient(rng));
        v->add(random_monomial(rng, 5), random_coefficient(rng));
      }
      o.expect(check_prelie_identity(poly, a, b, c), "weight " + lambda.to_string());
      o.expect(check_jacobi(poly, a, b, c), "weight " + lambda.to_string());
    }
  }
  const auto dd = divided_diff_instance();
  const auto q = test_quiver();
  const auto quiver = quiver_instance(q);
  for (int i = 0; i < 200; ++i) {
    LinComb<Word> a, b, c;
    LinComb<Path> p, r, s;
    for (auto* v : {&a, &b, &c}) {
      v->add(random_word(rng, 4), random_coefficient(rng));
      v->add(random_word(rng, 4), random_coefficient(rng));
    }
    for (auto* v : {&p, &r, &s}) {
      v->add(random_path(rng, q, 3), random_coefficient(rng));
      v->add(random_path(rng, q, 3), random_coefficient(rng));
    }
    o.expect(check_prelie_identity(dd, a, b, c));
    o.expect(check_jacobi(dd, a, b, c));
    o.expect(check_prelie_identity(quiver, p, r, s));
    o.expect(check_jacobi(quiver, p, r, s));
  }
  for (std::size_t m = 0; m <= 5; ++m) {
    for (std::size_t n = 0; m + n <= 5; ++n) {
      for (const auto& f : enumerate_forests(two(), m)) {
        for (const auto& g : enumerate_forests(two(), n)) {
          o.expect(prelie_forest(f, g) == prelie(forests, ForestComb(f), ForestComb(g)),
                   "forest pre-Lie product at (" + f.to_string() + ", " + g.to_string() + ")");
        }
      }
    }
  }
  return o;
}

Outcome tensor_square() {
  Outcome o;
  Rng rng(8);
  const RandomForestGen gen(labels());
  const auto forests = forest_instance();
  const auto fsq = tensor_square_instance(forests, forests);
  for (int i = 0; i < 100; ++i) {
    const auto a = gen.forest(rng, 0, 5);
    const auto b = gen.forest(rng, 0, 5);
    o.expect(check_coassoc(fsq, Tensor2<Forest>{a, b}));
    o.expect(check_mult_coalgebra_morphism(forests, a, b));
  }
  const auto poly = poly_instance(Rat(1));
  const auto psq = tensor_square_instance(poly, poly);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_monomial(rng, 8);
    const auto b = random_monomial(rng, 8);
    o.expect(check_coassoc(psq, Tensor2<Monomial>{a, b}));
    o.expect(check_mult_coalgebra_morphism(poly, a, b));
  }
  return o;
}

Outcome freeness() {
  Outcome o;
  const auto sample = random_forests(9, 200, 0, 6);
  const std::span<const Forest> s(sample);
  const std::vector<OperatedTarget<Forest>> targets{identity_target(labels()),
                                                    relabel_target(labels(), {{"x", "y"}, {"a", "b"}}),
                                                    collapse_target(labels())};
  for (const auto& t : targets) {
    auto phi = [&](const Forest& f) { return evaluate(f, t); };
    o.expect(check_multiplicative(t, phi, s), t.name);
    o.expect(check_intertwining(t, phi, s, labels()), t.name);
    o.expect(check_delta_compat(t, phi, s), t.name);
    o.expect(check_hopf_morphism_compat(t, s), t.name);
  }
  const auto broken = check_operated_morphism(broken_target(labels()), s, labels());
  o.expect(!broken.ok && !broken.detail.empty(), "broken target accepted");
  return o;
}

Outcome parser() {
  Outcome o;
  Rng rng(10);
  const RandomForestGen gen(labels());
  for (int i = 0; i < 500; ++i) {
    const auto f = gen.forest(rng, 0, 9);
    o.expect(parse_forest(f.to_string(), labels()) == f, "forest " + f.to_string());
    const auto a = gen.lincomb(rng, 6);
    o.expect(parse_lincomb(format_lincomb(a), labels()) == a, "combination " + format_lincomb(a));
    LinComb<Tensor2<Forest>> t;
    t.add(Tensor2<Forest>{gen.forest(rng, 0, 4), gen.forest(rng, 0, 4)}, random_coefficient(rng));
    t.add(Tensor2<Forest>{gen.forest(rng, 0, 4), gen.forest(rng, 0, 4)}, random_coefficient(rng));
    o.expect(parse_tensor(format_lincomb(t), labels()) == t, "tensor " + format_lincomb(t));
  }
  const auto position = [&](const std::string& text, const eps::Alphabets& a, std::size_t col) {
    try {
      parse_forest(text, a);
    } catch (const ParseError& e) {
      o.expect(e.line() == 1 && e.column() == col, "position for '" + text + "': " + e.what());
      return;
    }
    o.expect(false, "'" + text + "' was accepted");
  };
  position("x q", labels(), 3);
  position("x(y)", eps::Alphabets({"x", "y"}, {}), 1);
  position("a(x", labels(), 4);
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden examples", 1.0, golden},
      {2, "combinatorial = recursive coproduct", 30.0, oracle_equivalence},
      {3, "bialgebra laws", 30.0, bialgebra_laws},
      {4, "cocycle condition", 30.0, cocycle},
      {5, "nilpotency of D", 30.0, nilpotency},
      {6, "antipode", 60.0, antipode_laws},
      {7, "pre-Lie and Jacobi", 30.0, prelie_laws},
      {8, "tensor-square coalgebra", 30.0, tensor_square},
      {9, "freeness as recursion", 30.0, freeness},
      {10, "parser", 30.0, parser},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_seconds) {
      o.ok = false;
      o.detail = "over the time limit of " + std::to_string(c.limit_seconds) + " s";
    }
    if (!o.ok) ++failed;
    std::printf("criterion %2d %-38s %s  %zu checks  %.2f s%s%s\n", c.id, c.name, o.ok ? "PASS" : "FAIL", o.checks,
                secs, o.ok ? "" : "  -- ", o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
