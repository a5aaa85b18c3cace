#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eps {

/// Interned vertex label. Two symbols are equal iff their names are equal.
class Symbol {
 public:
  Symbol() = default;
  static Symbol intern(std::string_view name);

  std::string name() const;
  std::uint32_t id() const { return id_; }

  friend bool operator==(Symbol, Symbol) = default;

 private:
  explicit Symbol(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;
};

enum class DecorationKind : std::uint8_t { X, Omega };

struct Decoration {
  DecorationKind kind = DecorationKind::X;
  Symbol label;

  std::string name() const { return label.name(); }
  friend bool operator==(const Decoration&, const Decoration&) = default;
};

/// Declared label sets X (leaf-only) and Ω (operator labels). Disjoint.
class Alphabets {
 public:
  Alphabets() = default;
  Alphabets(const std::vector<std::string>& x, const std::vector<std::string>& omega);

  /// X = {x,y,z}, Ω = {a,b,w}.
  static Alphabets defaults();

  void declare_x(std::string_view name);
  void declare_omega(std::string_view name);

  std::optional<Decoration> lookup(std::string_view name) const;
  Decoration x(std::string_view name) const;
  Decoration omega(std::string_view name) const;

  const std::vector<std::string>& x_labels() const { return x_; }
  const std::vector<std::string>& omega_labels() const { return omega_; }

 private:
  bool known(std::string_view name) const;
  std::vector<std::string> x_;
  std::vector<std::string> omega_;
};

/// Address of a vertex: tree index, then child indices down to the vertex.
using VertexId = std::vector<std::uint32_t>;

std::string format_vertex_id(const VertexId& v);

class Tree;

/// Decorated planar rooted forest. Immutable value; the empty forest is the unit 1.
///
/// Stored as the preorder sequence of vertices with subtree sizes, so that
/// concatenation is an append and grafting a prepend.
class Forest {
 public:
  struct Node {
    Decoration dec;
    std::uint32_t size = 1;  // vertices in the subtree rooted here
    friend bool operator==(const Node&, const Node&) = default;
  };

  Forest() = default;
  Forest(const Tree& t);  // NOLINT(google-explicit-constructor)
  static Forest from_trees(const std::vector<Tree>& trees);
  /// Rebuilds from a preorder node list; validates sizes and decoration kinds.
  static Forest from_nodes(std::vector<Node> nodes);

  bool is_unit() const { return nodes_.empty(); }
  std::size_t vertex_count() const { return nodes_.size(); }
  std::size_t breadth() const;
  std::size_t depth() const;

  std::vector<Tree> trees() const;
  /// First tree and the remaining forest; requires a nonempty forest.
  std::pair<Tree, Forest> split_first() const;

  std::span<const Node> nodes() const { return nodes_; }

  /// Canonical text: trees separated by one space, children in parentheses, "1" for the unit.
  std::string to_string() const;

  friend bool operator==(const Forest&, const Forest&) = default;

 private:
  friend class Tree;
  friend Forest concat(const Forest&, const Forest&);
  friend Tree graft(const Decoration&, const Forest&);
  std::vector<Node> nodes_;
};

/// A forest of breadth one.
class Tree {
 public:
  static Tree leaf(const Decoration& d);

  const Decoration& root() const { return nodes_.front().dec; }
  Forest children() const;
  std::size_t vertex_count() const { return nodes_.size(); }

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  friend class Forest;
  friend Tree graft(const Decoration&, const Forest&);
  Tree() = default;
  std::vector<Forest::Node> nodes_;
};

/// B⁺_ω: new root decorated by omega with the trees of f as children.
/// Throws std::invalid_argument for an X decoration.
Tree graft(const Decoration& omega, const Forest& f);

Forest concat(const Forest& f1, const Forest& f2);

inline Forest operator*(const Forest& a, const Forest& b) { return concat(a, b); }

inline std::size_t depth(const Forest& f) { return f.depth(); }
inline std::size_t breadth(const Forest& f) { return f.breadth(); }
inline std::size_t vertex_count(const Forest& f) { return f.vertex_count(); }

/// Canonical order: lexicographic on the canonical string.
bool canonical_less(const Forest& a, const Forest& b);

/// All vertices in preorder.
std::vector<VertexId> vertices(const Forest& f);

Decoration decoration_at(const Forest& f, const VertexId& v);

/// Vertices in decreasing "higher or more on the left" order: maximum first,
/// the root of the right-most tree last. This is left-to-right postorder.
std::vector<VertexId> vertex_order(const Forest& f);

/// Same order as preorder indices into f.nodes().
std::vector<std::uint32_t> vertex_order_indices(const Forest& f);

/// Compares u and v under the total order "higher or more on the left",
/// evaluated directly from the recursive definition. u < v means u is an
/// ancestor of v, or u lies to the right of v.
std::strong_ordering compare_hl(const Forest& f, const VertexId& u, const VertexId& v);

/// I_1 = ∅, I_k = first k-1 entries of vertex_order. One set per vertex.
std::vector<std::vector<VertexId>> proper_biideals(const Forest& f);

/// Induced subforest: each kept vertex hangs from its nearest kept ancestor,
/// or becomes a root; planar order is inherited. restrict(f, ∅) = 1.
Forest restrict(const Forest& f, std::span<const VertexId> keep);

/// Same as restrict, with membership given per preorder index.
Forest restrict_mask(const Forest& f, const std::vector<char>& keep);

}  // namespace eps

template <>
struct std::hash<eps::Forest> {
  std::size_t operator()(const eps::Forest& f) const noexcept;
};
