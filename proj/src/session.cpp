#include "eps/session.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>
#include <tuple>
#include <type_traits>

#include "eps/antipode.hpp"
#include "eps/checks.hpp"
#include "eps/coproduct.hpp"
#include "eps/operated.hpp"
#include "eps/prelie.hpp"
#include "eps/random.hpp"
#include "eps/textio.hpp"

namespace eps {

InstanceSpec InstanceSpec::parse(const std::string& selector) {
  InstanceSpec s;
  auto arg = [&](const std::string& prefix) -> std::optional<std::string> {
    if (selector.rfind(prefix, 0) != 0) return std::nullopt;
    return selector.substr(prefix.size());
  };
  if (selector == "forest") {
    s.kind = Kind::Forest;
  } else if (selector == "divdiff") {
    s.kind = Kind::DivDiff;
  } else if (selector == "foissy") {
    s.kind = Kind::Foissy;
  } else if (selector == "trivial") {
    s.kind = Kind::Trivial;
  } else if (selector == "quiver") {
    s.kind = Kind::Quiver;
    s.quiver = test_quiver();
  } else if (auto lambda = arg("poly:")) {
    s.kind = Kind::Poly;
    try {
      s.lambda = Rat::parse(*lambda);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid weight '" + *lambda + "' in instance selector");
    }
  } else if (auto file = arg("quiver:")) {
    s.kind = Kind::Quiver;
    std::ifstream in(*file);
    if (!in) throw std::invalid_argument("cannot read quiver file '" + *file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    s.quiver = QuiverSpec::from_json_text(buf.str());
    s.quiver.validate();
  } else {
    throw std::invalid_argument("unknown instance '" + selector +
                                "' (expected forest, poly:LAMBDA, divdiff, quiver:FILE, foissy or trivial)");
  }
  return s;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"coassoc",     "compat",   "cocycle", "oracle", "nilpotency",
                                                 "antipode",    "prelie",   "jacobi",  "operated"};
  return names;
}

bool CheckReport::ok() const {
  for (const auto& s : suites) {
    if (!s.ok()) return false;
  }
  return true;
}

std::string CheckReport::render(OutputFormat f) const {
  if (f == OutputFormat::Json) {
    Json arr = Json::array();
    for (const auto& s : suites) {
      Json j{{"name", s.name}, {"passed", s.passed}, {"total", s.total}, {"ok", s.ok()}};
      if (!s.skipped.empty()) j["skipped"] = s.skipped;
      if (!s.counterexample.empty()) j["counterexample"] = s.counterexample;
      arr.push_back(std::move(j));
    }
    return Json{{"schema", kSchemaVersion}, {"ok", ok()}, {"suites", std::move(arr)}}.dump();
  }
  std::string out;
  for (const auto& s : suites) {
    out += s.name + ": ";
    if (!s.skipped.empty()) {
      out += "skipped (" + s.skipped + ")\n";
      continue;
    }
    out += std::to_string(s.passed) + "/" + std::to_string(s.total) + (s.passed == s.total ? " pass\n" : " FAIL\n");
    if (!s.counterexample.empty()) out += "  first counterexample: " + s.counterexample + "\n";
  }
  out += ok() ? "ok" : "FAILED";
  return out;
}

namespace {

template <class T>
class ValueOf final : public Value {
 public:
  explicit ValueOf(LinComb<T> v) : v_(std::move(v)) {}
  bool is_tensor() const override { return is_tensor_v; }
  std::string text() const override { return format_lincomb(v_); }
  std::string json() const override { return to_json(v_).dump(); }
  const LinComb<T>& get() const { return v_; }

  static constexpr bool is_tensor_v = eps::is_tensor<T>::value;

 private:
  LinComb<T> v_;
};

template <class T>
std::unique_ptr<Value> wrap(LinComb<T> v) {
  return std::make_unique<ValueOf<T>>(std::move(v));
}

/// Evaluates one check per sample, optionally on worker threads; the
/// reported counterexample is always the first failure in sample order.
template <class S, class Fn>
SuiteResult run_samples(const std::string& name, const std::vector<S>& samples, Fn&& check, unsigned threads) {
  std::vector<Witness> results(samples.size());
  auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < samples.size(); i += stride) {
      try {
        results[i] = check(samples[i]);
      } catch (const std::exception& e) {
        results[i] = Witness::fail(std::string("exception: ") + e.what());
      }
    }
  };
  const std::size_t n = std::max<unsigned>(1, std::min<std::size_t>(threads, samples.size()));
  if (n <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(work, t, n);
    for (auto& t : pool) t.join();
  }
  SuiteResult r;
  r.name = name;
  r.total = samples.size();
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].ok) {
      ++r.passed;
    } else if (r.counterexample.empty()) {
      r.counterexample = "sample " + std::to_string(i) + ": " + results[i].detail;
    }
  }
  return r;
}

template <class B>
class TypedSession final : public Session {
 public:
  TypedSession(EpsInstance<B> inst, InstanceSpec spec, Alphabets alphabets)
      : inst_(std::move(inst)), spec_(std::move(spec)), alphabets_(std::move(alphabets)) {}

  const std::string& instance_name() const override { return inst_.name; }
  const Alphabets& alphabets() const override { return alphabets_; }

  std::unique_ptr<Value> parse(const std::string& text) const override {
    if (text.find('#') != std::string::npos) return wrap(parse_tensor_with(syntax(), text));
    return wrap(parse_lincomb_with(syntax(), text));
  }

  std::unique_ptr<Value> parse_json(const std::string& text) const override {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(1, e.byte, {"JSON value"}, "malformed JSON");
    }
    const JsonContext ctx{&alphabets_, &spec_.quiver};
    const bool tensor = doc.is_object() && doc.contains("terms") && doc["terms"].is_array() &&
                        !doc["terms"].empty() && doc["terms"][0].is_object() && doc["terms"][0].contains("elem") &&
                        doc["terms"][0]["elem"].is_object() && doc["terms"][0]["elem"].contains("left");
    if (tensor) return wrap(lincomb_from_json<Tensor2<B>>(doc, ctx));
    if constexpr (std::is_same_v<B, Forest>) {
      if (doc.is_object() && doc.contains("forest")) return wrap(LinComb<Forest>(forest_from_json(doc, alphabets_)));
    }
    return wrap(lincomb_from_json<B>(doc, ctx));
  }

  std::unique_ptr<Value> coproduct(const Value& a) const override { return wrap(inst_.delta(elem(a))); }
  std::unique_ptr<Value> derivation(const Value& a) const override { return wrap(D(inst_, elem(a))); }
  std::unique_ptr<Value> antipode(const Value& a) const override { return wrap(eps::antipode(inst_, elem(a))); }
  std::unique_ptr<Value> antipode_inverse(const Value& a) const override {
    return wrap(eps::antipode_inverse(inst_, elem(a)));
  }
  std::unique_ptr<Value> prelie(const Value& a, const Value& b) const override {
    return wrap(eps::prelie(inst_, elem(a), elem(b)));
  }
  std::unique_ptr<Value> bracket(const Value& a, const Value& b) const override {
    return wrap(eps::bracket(inst_, elem(a), elem(b)));
  }

  std::string biideals(const Value& a, OutputFormat f) const override {
    if constexpr (std::is_same_v<B, Forest>) {
      const auto& v = elem(a);
      if (v.size() != 1 || !v.begin()->second.is_one()) {
        throw std::invalid_argument("biideals expects a single forest");
      }
      const Forest& forest = v.begin()->first;
      const auto ideals = proper_biideals(forest);
      Json arr = Json::array();
      std::string out;
      for (std::size_t k = 0; k < ideals.size(); ++k) {
        const Forest part = restrict(forest, ideals[k]);
        Json verts = Json::array();
        std::string set;
        for (const auto& id : ideals[k]) {
          const std::string label = decoration_at(forest, id).name();
          verts.push_back(Json{{"id", format_vertex_id(id)}, {"label", label}});
          set += (set.empty() ? "" : ", ") + format_vertex_id(id) + ":" + label;
        }
        arr.push_back(Json{{"k", k + 1}, {"vertices", std::move(verts)}, {"restriction", basis_to_json(part)}});
        out += (k ? "\n" : "") + std::to_string(k + 1) + ": {" + set + "} | " + part.to_string();
      }
      if (f == OutputFormat::Json) return Json{{"schema", kSchemaVersion}, {"biideals", std::move(arr)}}.dump();
      return out;
    } else {
      (void)a;
      (void)f;
      throw PreconditionError("biideals are defined for forests; instance '" + inst_.name + "' is not forest-based");
    }
  }

  std::unique_ptr<Value> evaluate(const Value& a, const std::string& target) const override {
    if constexpr (std::is_same_v<B, Forest>) {
      return wrap(eps::evaluate(elem(a), parse_forest_target(target, alphabets_)));
    } else {
      (void)a;
      (void)target;
      throw PreconditionError("evaluation starts from forests; instance '" + inst_.name + "' is not forest-based");
    }
  }

  CheckReport check(const std::string& suite, const CheckOptions& options) const override {
    CheckReport report;
    if (suite == "all") {
      for (const auto& name : suite_names()) {
        if (auto why = not_applicable(name)) {
          SuiteResult r;
          r.name = name;
          r.skipped = *why;
          report.suites.push_back(std::move(r));
        } else {
          report.suites.push_back(run(name, options));
        }
      }
      return report;
    }
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
      throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    if (auto why = not_applicable(suite)) throw PreconditionError("suite '" + suite + "': " + *why);
    report.suites.push_back(run(suite, options));
    return report;
  }

 private:
  auto syntax() const {
    if constexpr (std::is_same_v<B, Forest>) {
      return ForestSyntax{&alphabets_};
    } else if constexpr (std::is_same_v<B, Monomial>) {
      return MonomialSyntax{};
    } else if constexpr (std::is_same_v<B, Word>) {
      return WordSyntax{};
    } else {
      return PathSyntax{&spec_.quiver};
    }
  }

  static const LinComb<B>& elem(const Value& v) {
    if (auto p = dynamic_cast<const ValueOf<B>*>(&v)) return p->get();
    throw std::invalid_argument("expected an element of the algebra, got a tensor");
  }

  bool is_forest_instance() const { return spec_.kind == InstanceSpec::Kind::Forest; }

  std::optional<std::string> not_applicable(const std::string& suite) const {
    if ((suite == "cocycle" || suite == "oracle" || suite == "operated") && !is_forest_instance()) {
      return "needs the forest instance, got '" + inst_.name + "'";
    }
    if (suite == "nilpotency" || suite == "antipode") {
      if (!inst_.nilpotent()) return inst_.non_nilpotent_reason;
    }
    return std::nullopt;
  }

  B sample(Rng& rng, std::size_t size) const {
    if constexpr (std::is_same_v<B, Forest>) {
      return RandomForestGen(alphabets_).forest(rng, 0, size);
    } else if constexpr (std::is_same_v<B, Monomial>) {
      return random_monomial(rng, static_cast<std::uint32_t>(size));
    } else if constexpr (std::is_same_v<B, Word>) {
      return random_word(rng, static_cast<std::uint32_t>(size));
    } else {
      return random_path(rng, spec_.quiver, size);
    }
  }

  LinComb<B> sample_elem(Rng& rng, std::size_t size) const {
    LinComb<B> out;
    const std::size_t terms = rng.between(1, 2);
    for (std::size_t i = 0; i < terms; ++i) out.add(sample(rng, size), random_coefficient(rng));
    return out;
  }

  template <class S, class Fn>
  SuiteResult many(const std::string& name, const CheckOptions& o, S&& make, Fn&& check) const {
    Rng rng(o.seed);
    using Sample = std::decay_t<decltype(make(rng))>;
    std::vector<Sample> samples;
    samples.reserve(o.samples);
    for (std::size_t i = 0; i < o.samples; ++i) samples.push_back(make(rng));
    return run_samples(name, samples, check, o.threads);
  }

  SuiteResult run(const std::string& suite, const CheckOptions& o) const {
    const std::size_t n = o.max_vertices;
    // Products grow fast in the triple suites; keep their factors smaller.
    const std::size_t small = std::max<std::size_t>(1, std::min<std::size_t>(n, 4));
    auto basis = [&](Rng& rng) { return sample(rng, n); };
    auto pair = [&](Rng& rng) {
      B a = sample(rng, n);
      return std::pair<B, B>{a, sample(rng, n)};
    };
    auto triple = [&](Rng& rng) {
      auto a = sample_elem(rng, small);
      auto b = sample_elem(rng, small);
      return std::tuple<LinComb<B>, LinComb<B>, LinComb<B>>{a, b, sample_elem(rng, small)};
    };
    if (suite == "coassoc") {
      return many(suite, o, basis, [&](const B& b) { return check_coassoc(inst_, b); });
    }
    if (suite == "compat") {
      return many(suite, o, pair, [&](const auto& p) { return check_compat(inst_, p.first, p.second); });
    }
    if (suite == "nilpotency") {
      return many(suite, o, basis,
                  [&](const B& b) { return check_conv_nilpotency(inst_, b, inst_.nilpotency_bound(b)); });
    }
    if (suite == "antipode") {
      return many(suite, o, basis, [&](const B& b) {
        auto w = check_antipode_axioms(inst_, b);
        if (!w) return w;
        return check_antipode_bijective(inst_, LinComb<B>(b));
      });
    }
    if (suite == "prelie") {
      return many(suite, o, triple, [&](const auto& t) {
        const auto& [a, b, c] = t;
        auto w = check_prelie_identity(inst_, a, b, c);
        if constexpr (std::is_same_v<B, Forest>) {
          if (w && is_forest_instance()) {
            for (const auto& [x, cx] : a) {
              for (const auto& [y, cy] : b) {
                auto fast = prelie_forest(x, y);
                auto generic = eps::prelie(inst_, LinComb<B>(x), LinComb<B>(y));
                w = compare_sides("biideal pre-Lie product at (" + x.to_string() + ", " + y.to_string() + ")",
                                  fast, generic);
                if (!w) return w;
              }
            }
          }
        }
        return w;
      });
    }
    if (suite == "jacobi") {
      return many(suite, o, triple, [&](const auto& t) {
        const auto& [a, b, c] = t;
        return check_jacobi(inst_, a, b, c);
      });
    }
    if constexpr (std::is_same_v<B, Forest>) {
      if (suite == "cocycle") {
        const RandomForestGen gen(alphabets_);
        return many(
            suite, o, [&](Rng& rng) { return gen.lincomb(rng, n); },
            [&](const ForestComb& a) {
              for (const auto& omega : alphabets_.omega_labels()) {
                auto w = check_cocycle(alphabets_.omega(omega), a);
                if (!w) return w;
              }
              return Witness::pass();
            });
      }
      if (suite == "oracle") {
        return many(suite, o, basis, [&](const Forest& f) {
          const auto fast = forest_coproduct(f);
          for (const auto& [t, c] : fast) {
            if (t.left.vertex_count() + t.right.vertex_count() + 1 != f.vertex_count()) {
              return Witness::fail("grading fails at " + f.to_string() + " on term " + basis_text(t));
            }
          }
          return compare_sides("combinatorial vs recursive coproduct at " + f.to_string(), fast,
                               forest_coproduct_recursive(f));
        });
      }
      if (suite == "operated") return operated_suite(o);
    }
    throw std::logic_error("suite '" + suite + "' has no runner");
  }

  SuiteResult operated_suite(const CheckOptions& o) const {
    if constexpr (std::is_same_v<B, Forest>) {
      std::map<std::string, std::string> renaming;
      const auto& xs = alphabets_.x_labels();
      const auto& os = alphabets_.omega_labels();
      if (xs.size() >= 2) renaming[xs[0]] = xs[1];
      if (os.size() >= 2) renaming[os[0]] = os[1];
      const auto relabel = relabel_target(alphabets_, renaming);
      const auto identity = identity_target(alphabets_);
      const auto collapse = collapse_target(alphabets_);
      const auto broken = broken_target(alphabets_);

      Rng rng(o.seed);
      const RandomForestGen gen(alphabets_);
      std::vector<Forest> sample;
      for (std::size_t i = 0; i <= o.samples; ++i) sample.push_back(gen.forest(rng, 0, o.max_vertices));
      std::vector<std::size_t> index(o.samples);
      for (std::size_t i = 0; i < index.size(); ++i) index[i] = i;

      auto result = run_samples("operated", index, [&](std::size_t i) {
        const std::span<const Forest> window(sample.data() + i, 2);
        if (auto w = compare_sides("identity evaluation at " + sample[i].to_string(),
                                   eps::evaluate(sample[i], identity), ForestComb(sample[i]));
            !w) {
          return w;
        }
        if (auto w = check_operated_morphism(relabel, window, alphabets_); !w) return w;
        if (auto w = check_hopf_morphism_compat(relabel, window.first(1)); !w) return w;
        auto phi = [&](const Forest& f) { return eps::evaluate(f, collapse); };
        if (auto w = check_multiplicative(collapse, phi, window); !w) return w;
        return check_intertwining(collapse, phi, window, alphabets_);
      }, o.threads);

      // The broken target must be rejected, and a map deviating on one generator must be detected.
      ++result.total;
      const auto rejected = check_operated_morphism(broken, std::span<const Forest>(sample), alphabets_);
      if (!rejected.ok) {
        ++result.passed;
      } else if (result.counterexample.empty()) {
        result.counterexample = "the broken target was not rejected";
      }
      if (!xs.empty()) {
        ++result.total;
        auto deviant_target = relabel;
        deviant_target.generators[xs[0]] = ForestComb(Forest{});
        auto deviant = [&](const Forest& f) { return eps::evaluate(f, deviant_target); };
        if (!check_candidate_morphism(relabel, deviant, std::span<const Forest>(sample), alphabets_).ok) {
          ++result.passed;
        } else if (result.counterexample.empty()) {
          result.counterexample = "a map deviating on generator " + xs[0] + " was not detected";
        }
      }
      return result;
    } else {
      (void)o;
      throw std::logic_error("operated suite needs forests");
    }
  }

  EpsInstance<B> inst_;
  InstanceSpec spec_;
  Alphabets alphabets_;
};

}  // namespace

std::unique_ptr<Session> make_session(const InstanceSpec& spec, const Alphabets& alphabets) {
  using K = InstanceSpec::Kind;
  switch (spec.kind) {
    case K::Forest: return std::make_unique<TypedSession<Forest>>(forest_instance(), spec, alphabets);
    case K::Foissy: return std::make_unique<TypedSession<Forest>>(foissy_instance(), spec, alphabets);
    case K::Trivial: return std::make_unique<TypedSession<Forest>>(trivial_forest_instance(), spec, alphabets);
    case K::Poly: return std::make_unique<TypedSession<Monomial>>(poly_instance(spec.lambda), spec, alphabets);
    case K::DivDiff: return std::make_unique<TypedSession<Word>>(divided_diff_instance(), spec, alphabets);
    case K::Quiver: return std::make_unique<TypedSession<Path>>(quiver_instance(spec.quiver), spec, alphabets);
  }
  throw std::logic_error("unhandled instance kind");
}

}  // namespace eps
