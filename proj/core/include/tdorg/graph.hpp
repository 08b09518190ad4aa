#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tdorg {

enum class Side : std::uint8_t { U = 0, V = 1 };

constexpr Side opposite(Side s) noexcept { return s == Side::U ? Side::V : Side::U; }

/// A vertex of a bipartite graph: side plus 0-based index within that side.
/// Ordered by (side, index) with U before V.
struct VertexRef {
  Side side = Side::U;
  int index = 0;

  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

/// Positional token, 1-based: u1, v3, ...
std::string token(VertexRef v);
std::optional<VertexRef> parse_token(std::string_view text);

/// An edge u-v. `id` is its rank in the (u, v) lexicographic order.
struct EdgeRef {
  int u = 0;
  int v = 0;
  int id = 0;

  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

std::string token(const EdgeRef& e);  // u1v2

enum class Inclusion { ProperSubset, ProperSuperset, Equal, Incomparable };

/// Immutable bipartite graph with bipartition (U, V).
///
/// Vertices also have a global id: U occupies [0, u_count), V occupies
/// [u_count, u_count + v_count). Edges are kept sorted by (u, v).
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Edges are (u_index, v_index) pairs, 0-based; duplicates are dropped.
  /// `labels` is indexed by global id; empty strings mean "use the positional token".
  BipartiteGraph(int u_count, int v_count, std::span<const std::pair<int, int>> edges,
                 std::vector<std::string> labels = {});

  int u_count() const noexcept { return u_count_; }
  int v_count() const noexcept { return v_count_; }
  int vertex_count() const noexcept { return u_count_ + v_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u) * v_count_ + v] != 0; }
  /// False for same-side pairs.
  bool adjacent(VertexRef a, VertexRef b) const;

  /// Sorted indices of the neighbors (on the opposite side).
  const std::vector<int>& neighbors(VertexRef a) const;
  std::size_t degree(VertexRef a) const { return neighbors(a).size(); }

  const std::vector<EdgeRef>& edges() const noexcept { return edges_; }
  const EdgeRef& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
  std::optional<EdgeRef> find_edge(int u, int v) const;

  int id(VertexRef a) const noexcept { return a.side == Side::U ? a.index : u_count_ + a.index; }
  VertexRef ref(int global_id) const noexcept {
    return global_id < u_count_ ? VertexRef{Side::U, global_id} : VertexRef{Side::V, global_id - u_count_};
  }
  std::vector<VertexRef> vertices() const;

  /// Display name; the positional token unless the graph carries a custom label.
  std::string label(VertexRef a) const;
  bool has_custom_label(VertexRef a) const;
  const std::vector<std::string>& raw_labels() const noexcept { return labels_; }

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b);

 private:
  int u_count_ = 0;
  int v_count_ = 0;
  std::vector<char> adj_;
  std::vector<std::vector<int>> u_neighbors_;
  std::vector<std::vector<int>> v_neighbors_;
  std::vector<EdgeRef> edges_;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// I/O

struct ParsedGraph {
  BipartiteGraph graph;
  std::size_t duplicate_edges = 0;  // repeated `e` lines that were dropped
};

/// Parses the line-oriented `p tdorg` format. Throws ParseError.
ParsedGraph parse_graph(std::string_view text);
std::string serialize_graph(const BipartiteGraph& g);

// ---------------------------------------------------------------------------
// Elementary predicates

/// Classifies N(a) against N(b). Throws PreconditionError if a and b lie on different sides.
Inclusion neighborhood_relation(const BipartiteGraph& g, VertexRef a, VertexRef b);

/// N(a) is a proper subset of N(b); both on the same side.
bool proper_subset(const BipartiteGraph& g, VertexRef a, VertexRef b);

using TwinPair = std::pair<VertexRef, VertexRef>;

/// All same-side pairs (a, b), a < b, with N(a) = N(b).
std::vector<TwinPair> find_twins(const BipartiteGraph& g);

struct TwinCollapse {
  BipartiteGraph graph;
  /// Indexed by global id of the input graph; the vertex of `graph` it was merged into.
  std::vector<VertexRef> mapping;
};

/// Keeps the lowest-index vertex of each twin class and renumbers compactly.
TwinCollapse collapse_twins(const BipartiteGraph& g);

/// Disjoint, and neither u1v2 nor u2v1 is an edge. Throws PreconditionError if e1 == e2.
bool are_independent_edges(const BipartiteGraph& g, const EdgeRef& e1, const EdgeRef& e2);

/// All independent pairs (e1.id < e2.id).
std::vector<std::pair<EdgeRef, EdgeRef>> independent_edge_pairs(const BipartiteGraph& g);

bool is_chain_graph(const BipartiteGraph& g);

constexpr int kChordalBipartiteGuard = 24;

/// Exhaustive search for an induced cycle of length >= 6. Throws GuardError above 24 vertices.
bool is_chordal_bipartite(const BipartiteGraph& g);

struct Component {
  std::vector<VertexRef> vertices;  // sorted
  bool nontrivial = false;          // contains an edge
};

/// Connected components ordered by their smallest vertex.
std::vector<Component> connectivity(const BipartiteGraph& g);
bool is_connected(const BipartiteGraph& g);

/// Induced subgraph on `keep` (global ids, any order); vertices keep their relative order
/// and their display labels.
BipartiteGraph induced_subgraph(const BipartiteGraph& g, std::span<const int> keep);

/// Disjoint union; vertices of `b` follow those of `a` on each side.
BipartiteGraph disjoint_union(const BipartiteGraph& a, const BipartiteGraph& b);

}  // namespace tdorg
