#include "eps/forest.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "eps/freemod.hpp"

namespace eps {

namespace {

class SymbolTable {
 public:
  SymbolTable() { names_.emplace_back(); index_.emplace(std::string{}, 0); }

  std::uint32_t intern(std::string_view name) {
    {
      std::shared_lock lock(mu_);
      auto it = index_.find(std::string(name));
      if (it != index_.end()) return it->second;
    }
    std::unique_lock lock(mu_);
    auto [it, inserted] = index_.try_emplace(std::string(name), static_cast<std::uint32_t>(names_.size()));
    if (inserted) names_.emplace_back(name);
    return it->second;
  }

  std::string name(std::uint32_t id) const {
    std::shared_lock lock(mu_);
    return names_.at(id);
  }

 private:
  mutable std::shared_mutex mu_;
  std::deque<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

SymbolTable& symbols() {
  static SymbolTable table;
  return table;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// Preorder index of the vertex with the given address, or throws.
std::size_t resolve(const Forest& f, const VertexId& v) {
  auto nodes = f.nodes();
  if (v.empty()) throw std::invalid_argument("unknown vertex: empty address");
  std::size_t begin = 0;
  std::size_t end = nodes.size();
  std::size_t found = 0;
  for (std::size_t depth = 0; depth < v.size(); ++depth) {
    std::size_t i = begin;
    std::uint32_t k = 0;
    while (i < end && k < v[depth]) {
      i += nodes[i].size;
      ++k;
    }
    if (i >= end) throw std::invalid_argument("unknown vertex " + format_vertex_id(v));
    found = i;
    begin = i + 1;
    end = i + nodes[i].size;
  }
  return found;
}

void collect_ids(std::span<const Forest::Node> nodes, std::size_t begin, std::size_t end, VertexId& prefix,
                 std::vector<VertexId>& pre, std::vector<VertexId>* post) {
  std::uint32_t k = 0;
  for (std::size_t i = begin; i < end; i += nodes[i].size, ++k) {
    prefix.push_back(k);
    pre.push_back(prefix);
    collect_ids(nodes, i + 1, i + nodes[i].size, prefix, pre, post);
    if (post) post->push_back(prefix);
    prefix.pop_back();
  }
}

void postorder(std::span<const Forest::Node> nodes, std::size_t begin, std::size_t end,
               std::vector<std::uint32_t>& out) {
  for (std::size_t i = begin; i < end; i += nodes[i].size) {
    postorder(nodes, i + 1, i + nodes[i].size, out);
    out.push_back(static_cast<std::uint32_t>(i));
  }
}

void restrict_into(std::span<const Forest::Node> nodes, std::size_t begin, std::size_t end,
                   const std::vector<char>& keep, std::vector<Forest::Node>& out) {
  for (std::size_t i = begin; i < end; i += nodes[i].size) {
    if (keep[i]) {
      std::size_t pos = out.size();
      out.push_back(nodes[i]);
      restrict_into(nodes, i + 1, i + nodes[i].size, keep, out);
      out[pos].size = static_cast<std::uint32_t>(out.size() - pos);
    } else {
      restrict_into(nodes, i + 1, i + nodes[i].size, keep, out);
    }
  }
}

void print_range(std::span<const Forest::Node> nodes, std::size_t begin, std::size_t end, std::string& out) {
  bool first = true;
  for (std::size_t i = begin; i < end; i += nodes[i].size) {
    if (!first) out.push_back(' ');
    first = false;
    out += nodes[i].dec.label.name();
    if (nodes[i].size > 1) {
      out.push_back('(');
      print_range(nodes, i + 1, i + nodes[i].size, out);
      out.push_back(')');
    }
  }
}

std::size_t depth_range(std::span<const Forest::Node> nodes, std::size_t begin, std::size_t end) {
  std::size_t d = 0;
  for (std::size_t i = begin; i < end; i += nodes[i].size) {
    std::size_t here = nodes[i].dec.kind == DecorationKind::X ? 0 : 1 + depth_range(nodes, i + 1, i + nodes[i].size);
    d = std::max(d, here);
  }
  return d;
}

bool is_prefix(const VertexId& a, const VertexId& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

// "higher or more on the left", following the recursive definition.
std::strong_ordering compare_hl_rec(const VertexId& u, const VertexId& v, std::size_t level) {
  VertexId ut(u.begin() + static_cast<std::ptrdiff_t>(level), u.end());
  VertexId vt(v.begin() + static_cast<std::ptrdiff_t>(level), v.end());
  if (ut == vt) return std::strong_ordering::equal;
  // u ≤_h v: a directed path from u down to v
  if (is_prefix(ut, vt)) return std::strong_ordering::less;
  if (is_prefix(vt, ut)) return std::strong_ordering::greater;
  // Incomparable for ≤_h, so both lie strictly below any shared root.
  if (ut.front() != vt.front()) {
    // u in T_i, v in T_j with j < i gives u ≤_l v.
    return ut.front() > vt.front() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  // Same tree: compare in the forest obtained by deleting its root.
  return compare_hl_rec(u, v, level + 1);
}

}  // namespace

Symbol Symbol::intern(std::string_view name) { return Symbol(symbols().intern(name)); }

std::string Symbol::name() const { return symbols().name(id_); }

Alphabets::Alphabets(const std::vector<std::string>& x, const std::vector<std::string>& omega) {
  for (const auto& n : x) declare_x(n);
  for (const auto& n : omega) declare_omega(n);
}

Alphabets Alphabets::defaults() { return Alphabets({"x", "y", "z"}, {"a", "b", "w"}); }

bool Alphabets::known(std::string_view name) const {
  return std::find(x_.begin(), x_.end(), name) != x_.end() ||
         std::find(omega_.begin(), omega_.end(), name) != omega_.end();
}

void Alphabets::declare_x(std::string_view name) {
  if (!is_identifier(name)) throw std::invalid_argument("label '" + std::string(name) + "' is not an identifier");
  if (std::find(omega_.begin(), omega_.end(), name) != omega_.end()) {
    throw std::invalid_argument("label '" + std::string(name) + "' declared in both X and Omega");
  }
  if (!known(name)) x_.emplace_back(name);
}

void Alphabets::declare_omega(std::string_view name) {
  if (!is_identifier(name)) throw std::invalid_argument("label '" + std::string(name) + "' is not an identifier");
  if (std::find(x_.begin(), x_.end(), name) != x_.end()) {
    throw std::invalid_argument("label '" + std::string(name) + "' declared in both X and Omega");
  }
  if (!known(name)) omega_.emplace_back(name);
}

std::optional<Decoration> Alphabets::lookup(std::string_view name) const {
  if (std::find(x_.begin(), x_.end(), name) != x_.end()) return Decoration{DecorationKind::X, Symbol::intern(name)};
  if (std::find(omega_.begin(), omega_.end(), name) != omega_.end()) {
    return Decoration{DecorationKind::Omega, Symbol::intern(name)};
  }
  return std::nullopt;
}

Decoration Alphabets::x(std::string_view name) const {
  auto d = lookup(name);
  if (!d || d->kind != DecorationKind::X) throw std::invalid_argument("'" + std::string(name) + "' is not an X-label");
  return *d;
}

Decoration Alphabets::omega(std::string_view name) const {
  auto d = lookup(name);
  if (!d || d->kind != DecorationKind::Omega) {
    throw std::invalid_argument("'" + std::string(name) + "' is not an Omega-label");
  }
  return *d;
}

std::string format_vertex_id(const VertexId& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s.push_back('.');
    s += std::to_string(v[i]);
  }
  return s;
}

Forest::Forest(const Tree& t) : nodes_(t.nodes_) {}

Forest Forest::from_trees(const std::vector<Tree>& trees) {
  Forest f;
  for (const auto& t : trees) f.nodes_.insert(f.nodes_.end(), t.nodes_.begin(), t.nodes_.end());
  return f;
}

Forest Forest::from_nodes(std::vector<Node> nodes) {
  // Check that subtree sizes nest properly.
  std::vector<std::size_t> open_ends;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    while (!open_ends.empty() && open_ends.back() <= i) open_ends.pop_back();
    std::size_t end = i + nodes[i].size;
    if (nodes[i].size == 0 || end > nodes.size() || (!open_ends.empty() && end > open_ends.back())) {
      throw std::invalid_argument("malformed preorder node sequence");
    }
    if (nodes[i].size > 1 && nodes[i].dec.kind != DecorationKind::Omega) {
      throw std::invalid_argument("internal vertex '" + nodes[i].dec.name() + "' must carry an Omega-label");
    }
    open_ends.push_back(end);
  }
  Forest f;
  f.nodes_ = std::move(nodes);
  return f;
}

std::size_t Forest::breadth() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < nodes_.size(); i += nodes_[i].size) ++n;
  return n;
}

std::size_t Forest::depth() const { return depth_range(nodes_, 0, nodes_.size()); }

std::vector<Tree> Forest::trees() const {
  std::vector<Tree> out;
  for (std::size_t i = 0; i < nodes_.size(); i += nodes_[i].size) {
    Tree t;
    t.nodes_.assign(nodes_.begin() + static_cast<std::ptrdiff_t>(i),
                    nodes_.begin() + static_cast<std::ptrdiff_t>(i + nodes_[i].size));
    out.push_back(std::move(t));
  }
  return out;
}

std::pair<Tree, Forest> Forest::split_first() const {
  if (nodes_.empty()) throw std::logic_error("split_first on the empty forest");
  auto cut = nodes_.begin() + nodes_.front().size;
  Tree t;
  t.nodes_.assign(nodes_.begin(), cut);
  Forest rest;
  rest.nodes_.assign(cut, nodes_.end());
  return {std::move(t), std::move(rest)};
}

std::string Forest::to_string() const {
  if (nodes_.empty()) return "1";
  std::string s;
  print_range(nodes_, 0, nodes_.size(), s);
  return s;
}

Tree Tree::leaf(const Decoration& d) {
  Tree t;
  t.nodes_.push_back({d, 1});
  return t;
}

Forest Tree::children() const {
  return Forest::from_nodes(std::vector<Forest::Node>(nodes_.begin() + 1, nodes_.end()));
}

Tree graft(const Decoration& omega, const Forest& f) {
  if (omega.kind != DecorationKind::Omega) {
    throw std::invalid_argument("cannot graft under X-label '" + omega.name() + "'");
  }
  Tree t;
  t.nodes_.reserve(f.nodes_.size() + 1);
  t.nodes_.push_back({omega, static_cast<std::uint32_t>(f.nodes_.size() + 1)});
  t.nodes_.insert(t.nodes_.end(), f.nodes_.begin(), f.nodes_.end());
  return t;
}

Forest concat(const Forest& f1, const Forest& f2) {
  Forest out;
  out.nodes_.reserve(f1.nodes_.size() + f2.nodes_.size());
  out.nodes_ = f1.nodes_;
  out.nodes_.insert(out.nodes_.end(), f2.nodes_.begin(), f2.nodes_.end());
  return out;
}

bool canonical_less(const Forest& a, const Forest& b) { return a.to_string() < b.to_string(); }

std::vector<VertexId> vertices(const Forest& f) {
  std::vector<VertexId> pre;
  VertexId prefix;
  collect_ids(f.nodes(), 0, f.vertex_count(), prefix, pre, nullptr);
  return pre;
}

Decoration decoration_at(const Forest& f, const VertexId& v) { return f.nodes()[resolve(f, v)].dec; }

std::vector<VertexId> vertex_order(const Forest& f) {
  std::vector<VertexId> pre;
  std::vector<VertexId> post;
  VertexId prefix;
  collect_ids(f.nodes(), 0, f.vertex_count(), prefix, pre, &post);
  return post;
}

std::vector<std::uint32_t> vertex_order_indices(const Forest& f) {
  std::vector<std::uint32_t> out;
  out.reserve(f.vertex_count());
  postorder(f.nodes(), 0, f.vertex_count(), out);
  return out;
}

std::strong_ordering compare_hl(const Forest& f, const VertexId& u, const VertexId& v) {
  resolve(f, u);
  resolve(f, v);
  return compare_hl_rec(u, v, 0);
}

std::vector<std::vector<VertexId>> proper_biideals(const Forest& f) {
  auto order = vertex_order(f);
  std::vector<std::vector<VertexId>> out;
  out.reserve(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    out.emplace_back(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return out;
}

Forest restrict(const Forest& f, std::span<const VertexId> keep) {
  std::vector<char> mask(f.vertex_count(), 0);
  for (const auto& v : keep) mask[resolve(f, v)] = 1;
  return restrict_mask(f, mask);
}

Forest restrict_mask(const Forest& f, const std::vector<char>& keep) {
  if (keep.size() != f.vertex_count()) throw std::invalid_argument("restriction mask size mismatch");
  std::vector<Forest::Node> out;
  restrict_into(f.nodes(), 0, f.vertex_count(), keep, out);
  return Forest::from_nodes(std::move(out));
}

}  // namespace eps

std::size_t std::hash<eps::Forest>::operator()(const eps::Forest& f) const noexcept {
  std::size_t h = 0x51ed27;
  for (const auto& n : f.nodes()) {
    h = eps::hash_mix(h, (static_cast<std::size_t>(n.dec.label.id()) << 1) | static_cast<std::size_t>(n.dec.kind));
    h = eps::hash_mix(h, n.size);
  }
  return h;
}
