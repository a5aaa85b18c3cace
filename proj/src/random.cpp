#include "eps/random.hpp"

#include <limits>

namespace eps {

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v = engine_();
  while (v >= limit) v = engine_();
  return v % n;
}

namespace {

Decoration pick_label(Rng& rng, const Alphabets& a, bool leaf) {
  const auto& xs = a.x_labels();
  const auto& os = a.omega_labels();
  const std::size_t choices = leaf ? xs.size() + os.size() : os.size();
  if (choices == 0) throw std::invalid_argument("no labels available for a random forest");
  std::size_t i = rng.below(choices);
  if (leaf && i < xs.size()) return a.x(xs[i]);
  if (leaf) i -= xs.size();
  return a.omega(os[i]);
}

void enumerate_into(const Alphabets& a, std::size_t n, std::vector<Forest::Node>& prefix,
                    std::vector<std::vector<Forest::Node>>& out);

// All trees of size n appended to prefix, each continued by all forests of size rest.
void enumerate_trees(const Alphabets& a, std::size_t n, std::size_t rest, std::vector<Forest::Node>& prefix,
                     std::vector<std::vector<Forest::Node>>& out) {
  std::vector<Decoration> labels;
  if (n == 1) {
    for (const auto& x : a.x_labels()) labels.push_back(a.x(x));
  }
  for (const auto& o : a.omega_labels()) labels.push_back(a.omega(o));
  for (const auto& d : labels) {
    const std::size_t pos = prefix.size();
    prefix.push_back({d, static_cast<std::uint32_t>(n)});
    std::vector<std::vector<Forest::Node>> below;
    std::vector<Forest::Node> scratch;
    enumerate_into(a, n - 1, scratch, below);
    for (const auto& b : below) {
      prefix.insert(prefix.end(), b.begin(), b.end());
      enumerate_into(a, rest, prefix, out);
      prefix.resize(pos + 1);
    }
    prefix.resize(pos);
  }
}

void enumerate_into(const Alphabets& a, std::size_t n, std::vector<Forest::Node>& prefix,
                    std::vector<std::vector<Forest::Node>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t first = 1; first <= n; ++first) enumerate_trees(a, first, n - first, prefix, out);
}

}  // namespace

void RandomForestGen::append_forest(Rng& rng, std::size_t n, std::vector<Forest::Node>& out) const {
  while (n > 0) {
    const std::size_t size = rng.between(1, n);
    out.push_back({pick_label(rng, alphabets_, size == 1), static_cast<std::uint32_t>(size)});
    append_forest(rng, size - 1, out);
    n -= size;
  }
}

Forest RandomForestGen::forest_of_size(Rng& rng, std::size_t n) const {
  std::vector<Forest::Node> nodes;
  nodes.reserve(n);
  append_forest(rng, n, nodes);
  return Forest::from_nodes(std::move(nodes));
}

Forest RandomForestGen::forest(Rng& rng, std::size_t min_vertices, std::size_t max_vertices) const {
  return forest_of_size(rng, rng.between(min_vertices, max_vertices));
}

LinComb<Forest> RandomForestGen::lincomb(Rng& rng, std::size_t max_vertices) const {
  LinComb<Forest> out;
  const std::size_t terms = rng.between(1, 3);
  for (std::size_t i = 0; i < terms; ++i) out.add(forest(rng, 0, max_vertices), random_coefficient(rng));
  return out;
}

std::vector<Forest> enumerate_forests(const Alphabets& alphabets, std::size_t n) {
  std::vector<std::vector<Forest::Node>> raw;
  std::vector<Forest::Node> prefix;
  enumerate_into(alphabets, n, prefix, raw);
  std::vector<Forest> out;
  out.reserve(raw.size());
  for (auto& nodes : raw) out.push_back(Forest::from_nodes(std::move(nodes)));
  return out;
}

Rat random_coefficient(Rng& rng) {
  long p = static_cast<long>(rng.between(1, 5));
  if (rng.coin()) p = -p;
  const long q = static_cast<long>(rng.between(1, 3));
  return Rat(p, q);
}

Monomial random_monomial(Rng& rng, std::uint32_t max_exponent) {
  return Monomial{static_cast<std::uint32_t>(rng.between(0, max_exponent))};
}

Word random_word(Rng& rng, std::uint32_t max_degree) {
  Word w;
  std::uint64_t budget = rng.between(0, max_degree);
  while (budget > 0) {
    const auto l = static_cast<std::uint32_t>(rng.between(1, budget));
    w.letters.push_back(l);
    budget -= l;
  }
  return w;
}

Path random_path(Rng& rng, const QuiverSpec& q, std::size_t max_length) {
  const std::size_t len = rng.between(0, max_length);
  std::uint32_t at = static_cast<std::uint32_t>(rng.below(q.vertices.size()));
  if (len == 0) return trivial_path(q, q.vertices[at]);
  std::vector<std::string> arrows;
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < q.arrows.size(); ++k) {
      if (q.arrows[k].source == at) out.push_back(k);
    }
    if (out.empty()) break;
    const auto& a = q.arrows[out[rng.below(out.size())]];
    arrows.push_back(a.name);
    at = a.target;
  }
  if (arrows.empty()) return trivial_path(q, q.vertices[at]);
  return make_path(q, arrows);
}

QuiverSpec test_quiver() {
  QuiverSpec q;
  q.vertices = {"v0", "v1", "v2", "v3"};
  q.arrows = {{"p", 0, 1}, {"q", 1, 2}, {"r", 2, 3}, {"l", 1, 1}, {"s", 0, 2}};
  q.validate();
  return q;
}

}  // namespace eps
