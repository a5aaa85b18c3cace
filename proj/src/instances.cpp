#include "eps/instances.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace eps {

namespace {

Word word_concat(const Word& a, const Word& b) {
  Word w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

Word slice(const Word& w, std::size_t begin, std::size_t end) {
  Word out;
  out.letters.assign(w.letters.begin() + static_cast<std::ptrdiff_t>(begin),
                     w.letters.begin() + static_cast<std::ptrdiff_t>(end));
  return out;
}

Word generator(std::uint32_t n) {
  Word w;
  if (n > 0) w.letters.push_back(n);
  return w;
}

Path sub_path(const Path& p, std::size_t begin, std::size_t end) {
  Path out;
  out.arrows.assign(p.arrows.begin() + static_cast<std::ptrdiff_t>(begin),
                    p.arrows.begin() + static_cast<std::ptrdiff_t>(end));
  return out;
}

Path vertex_path(std::string v) {
  Path p;
  p.vertex = std::move(v);
  return p;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// B⁺ with the vertex's own decoration; a bare X-vertex is its own leaf.
Forest regraft(const Decoration& d, const Forest& below) {
  if (below.is_unit()) return Forest(Tree::leaf(d));
  return Forest(graft(d, below));
}

LinComb<Tensor2<Forest>> foissy_coproduct(const Forest& f) {
  using T2 = Tensor2<Forest>;
  if (f.is_unit()) return LinComb<T2>(T2{Forest{}, Forest{}});
  if (f.breadth() >= 2) {
    auto [first, rest] = f.split_first();
    Forest t(first);
    LinComb<T2> out;
    for (const auto& [bc, c] : foissy_coproduct(rest)) out.add(T2{concat(t, bc.left), bc.right}, c);
    for (const auto& [bc, c] : foissy_coproduct(t)) out.add(T2{bc.left, concat(bc.right, rest)}, c);
    out.add(T2{t, rest}, Rat(-1));
    return out;
  }
  auto [tree, unused] = f.split_first();
  const Decoration root = tree.root();
  LinComb<T2> out(T2{f, Forest{}});
  for (const auto& [bc, c] : foissy_coproduct(tree.children())) out.add(T2{bc.left, regraft(root, bc.right)}, c);
  return out;
}

}  // namespace

std::uint64_t Word::degree() const { return std::accumulate(letters.begin(), letters.end(), std::uint64_t{0}); }

EpsInstance<Monomial> poly_instance(const Rat& lambda) {
  using T2 = Tensor2<Monomial>;
  EpsInstance<Monomial> inst;
  inst.name = "poly:" + lambda.to_string();
  inst.product = [](const Monomial& a, const Monomial& b) {
    return LinComb<Monomial>(Monomial{a.exponent + b.exponent});
  };
  inst.unit = Monomial{0};
  inst.coproduct = [lambda](const Monomial& m) {
    LinComb<T2> out;
    const std::uint32_t n = m.exponent;
    if (n == 0) {
      out.add(T2{Monomial{0}, Monomial{0}}, -lambda);
      return out;
    }
    for (std::uint32_t i = 0; i < n; ++i) out.add(T2{Monomial{i}, Monomial{n - 1 - i}}, Rat(1));
    for (std::uint32_t i = 1; i < n; ++i) out.add(T2{Monomial{i}, Monomial{n - i}}, lambda);
    return out;
  };
  inst.weight = lambda;
  if (lambda.is_zero()) {
    inst.nilpotency_bound = [](const Monomial& m) { return static_cast<std::size_t>(m.exponent); };
  } else {
    inst.non_nilpotent_reason = "D is not locally nilpotent at weight " + lambda.to_string() +
                                " (D(1) = " + (-lambda).to_string() + "·1, so no power of D vanishes on 1)";
  }
  return inst;
}

EpsInstance<Word> divided_diff_instance() {
  using T2 = Tensor2<Word>;
  EpsInstance<Word> inst;
  inst.name = "divdiff";
  inst.product = [](const Word& a, const Word& b) { return LinComb<Word>(word_concat(a, b)); };
  inst.unit = Word{};
  inst.coproduct = [](const Word& w) {
    LinComb<T2> out;
    const std::size_t m = w.letters.size();
    // Weight-0 derivation rule letter by letter.
    for (std::size_t j = 0; j < m; ++j) {
      const Word prefix = slice(w, 0, j);
      const Word suffix = slice(w, j + 1, m);
      const std::uint32_t n = w.letters[j];
      for (std::uint32_t i = 0; i < n; ++i) {
        out.add(T2{word_concat(prefix, generator(i)), word_concat(generator(n - 1 - i), suffix)}, Rat(1));
      }
    }
    return out;
  };
  inst.weight = Rat(0);
  inst.nilpotency_bound = [](const Word& w) { return static_cast<std::size_t>(w.degree()); };
  return inst;
}

QuiverSpec QuiverSpec::from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("quiver JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw std::invalid_argument("quiver JSON: /vertices must be an array");
  }
  if (!doc.contains("arrows") || !doc["arrows"].is_array()) {
    throw std::invalid_argument("quiver JSON: /arrows must be an array");
  }
  QuiverSpec q;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    const auto& v = doc["vertices"][i];
    if (!v.is_string()) throw std::invalid_argument("quiver JSON: /vertices/" + std::to_string(i) + " must be a string");
    q.vertices.push_back(v.get<std::string>());
  }
  for (std::size_t i = 0; i < doc["arrows"].size(); ++i) {
    const auto& a = doc["arrows"][i];
    const std::string where = "/arrows/" + std::to_string(i);
    for (const char* key : {"name", "src", "tgt"}) {
      if (!a.is_object() || !a.contains(key) || !a[key].is_string()) {
        throw std::invalid_argument("quiver JSON: " + where + "/" + key + " must be a string");
      }
    }
    auto src = q.vertex_index(a["src"].get<std::string>());
    auto tgt = q.vertex_index(a["tgt"].get<std::string>());
    if (!src || !tgt) throw std::invalid_argument("quiver JSON: " + where + " refers to an unknown vertex");
    q.arrows.push_back({a["name"].get<std::string>(), *src, *tgt});
  }
  q.validate();
  return q;
}

void QuiverSpec::validate() const {
  std::vector<std::string> names = vertices;
  for (const auto& a : arrows) {
    names.push_back(a.name);
    if (a.source >= vertices.size() || a.target >= vertices.size()) {
      throw std::invalid_argument("ill-formed quiver: arrow '" + a.name + "' has an endpoint outside Q0");
    }
  }
  for (const auto& n : names) {
    if (!is_identifier(n)) throw std::invalid_argument("ill-formed quiver: '" + n + "' is not an identifier");
  }
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end()) {
    throw std::invalid_argument("ill-formed quiver: vertex and arrow names must be distinct");
  }
}

std::optional<std::uint32_t> QuiverSpec::vertex_index(std::string_view name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == name) return static_cast<std::uint32_t>(i);
  }
  return std::nullopt;
}

std::optional<std::uint32_t> QuiverSpec::arrow_index(std::string_view name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i].name == name) return static_cast<std::uint32_t>(i);
  }
  return std::nullopt;
}

std::string path_source(const QuiverSpec& q, const Path& p) {
  if (p.trivial()) return p.vertex;
  return q.vertices[q.arrows[*q.arrow_index(p.arrows.front())].source];
}

std::string path_target(const QuiverSpec& q, const Path& p) {
  if (p.trivial()) return p.vertex;
  return q.vertices[q.arrows[*q.arrow_index(p.arrows.back())].target];
}

LinComb<Path> path_product(const QuiverSpec& q, const Path& p1, const Path& p2) {
  if (path_target(q, p1) != path_source(q, p2)) return {};
  if (p1.trivial()) return LinComb<Path>(p2);
  if (p2.trivial()) return LinComb<Path>(p1);
  Path out = p1;
  out.arrows.insert(out.arrows.end(), p2.arrows.begin(), p2.arrows.end());
  return LinComb<Path>(out);
}

Path make_path(const QuiverSpec& q, const std::vector<std::string>& arrow_names) {
  if (arrow_names.empty()) throw std::invalid_argument("a nontrivial path needs at least one arrow");
  Path p;
  for (std::size_t i = 0; i < arrow_names.size(); ++i) {
    auto idx = q.arrow_index(arrow_names[i]);
    if (!idx) throw std::invalid_argument("unknown arrow '" + arrow_names[i] + "'");
    if (i > 0) {
      auto prev = *q.arrow_index(arrow_names[i - 1]);
      if (q.arrows[prev].target != q.arrows[*idx].source) {
        throw std::invalid_argument("arrows '" + arrow_names[i - 1] + "' and '" + arrow_names[i] +
                                    "' are not composable");
      }
    }
    p.arrows.push_back(arrow_names[i]);
  }
  return p;
}

Path trivial_path(const QuiverSpec& q, std::string_view vertex) {
  if (!q.vertex_index(vertex)) throw std::invalid_argument("unknown vertex '" + std::string(vertex) + "'");
  return vertex_path(std::string(vertex));
}

EpsInstance<Path> quiver_instance(const QuiverSpec& q) {
  using T2 = Tensor2<Path>;
  q.validate();
  EpsInstance<Path> inst;
  inst.name = "quiver";
  inst.product = [q](const Path& a, const Path& b) { return path_product(q, a, b); };
  inst.coproduct = [q](const Path& p) {
    LinComb<T2> out;
    const std::size_t n = p.length();
    if (n == 0) return out;
    const Path src = vertex_path(path_source(q, sub_path(p, 0, 1)));
    const Path tgt = vertex_path(path_target(q, sub_path(p, n - 1, n)));
    if (n == 1) {
      out.add(T2{src, tgt}, Rat(1));
      return out;
    }
    out.add(T2{src, sub_path(p, 1, n)}, Rat(1));
    out.add(T2{sub_path(p, 0, n - 1), tgt}, Rat(1));
    for (std::size_t i = 1; i + 2 <= n; ++i) out.add(T2{sub_path(p, 0, i), sub_path(p, i + 1, n)}, Rat(1));
    return out;
  };
  inst.weight = Rat(0);
  inst.nilpotency_bound = [](const Path& p) { return p.length(); };
  return inst;
}

EpsInstance<Forest> foissy_instance() {
  EpsInstance<Forest> inst;
  inst.name = "foissy";
  inst.product = [](const Forest& a, const Forest& b) { return LinComb<Forest>(concat(a, b)); };
  inst.unit = Forest{};
  inst.coproduct = foissy_coproduct;
  inst.weight = Rat(-1);
  inst.non_nilpotent_reason = "D is not locally nilpotent at weight -1 (D(1) = 1)";
  return inst;
}

EpsInstance<Forest> trivial_forest_instance() {
  return trivial_instance<Forest>(
      "trivial", [](const Forest& a, const Forest& b) { return LinComb<Forest>(concat(a, b)); }, Forest{});
}

}  // namespace eps
