#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tdorg/graph.hpp"
#include "tdorg/representation.hpp"

namespace tdorg {

using VertexSet = std::vector<VertexRef>;  // sorted, duplicate-free

/// Sorts and deduplicates; throws PreconditionError on out-of-range vertices.
VertexSet make_vertex_set(const BipartiteGraph& g, std::vector<VertexRef> vertices);
std::string format_vertex_set(const VertexSet& b);  // "u1 u2 v1"
/// Parses whitespace-separated positional tokens. Throws PreconditionError.
VertexSet parse_vertex_set(const BipartiteGraph& g, std::string_view text);

enum class BuriedCondition { A, B, C, D };

char condition_letter(BuriedCondition c);

struct BuriedCheck {
  bool buried = false;
  std::optional<BuriedCondition> violated;  // first violated condition
  std::array<bool, 4> satisfied{};          // (a) .. (d)
  std::string detail;                       // reason for the first violation
  std::optional<std::pair<EdgeRef, EdgeRef>> inner_pair;  // independent edges inside G[B]
  std::optional<std::pair<EdgeRef, EdgeRef>> outer_pair;  // first edge lies in G - B

  explicit operator bool() const noexcept { return buried; }
};

/// Direct evaluation of conditions (a)-(d) for B.
BuriedCheck is_buried_subgraph(const BipartiteGraph& g, const VertexSet& b);

struct KSets {
  std::vector<int> k_u;  // u outside B adjacent to all of B n V
  std::vector<int> k_v;  // v outside B adjacent to all of B n U

  friend bool operator==(const KSets&, const KSets&) = default;
};

/// Requires B buried and g a 2DORG (PreconditionError). Throws ConsistencyError if
/// K_U u K_V does not induce a biclique.
KSets k_sets(const BipartiteGraph& g, const VertexSet& b);

struct BuriedSubgraph {
  VertexSet vertices;
  std::pair<EdgeRef, EdgeRef> inner_witness;
  std::pair<EdgeRef, EdgeRef> outer_witness;
  KSets k;
};

/// A buried subgraph together with the ordering data it was cut from.
struct Extraction {
  BuriedSubgraph subgraph;
  WeakOrdering ordering;
  EdgeRef anchor;          // lexicographically smallest edge with an independent partner
  EdgeRef anchor_partner;  // its smallest partner
  VertexRef u_left, u_right, v_left, v_right;
  std::size_t candidates_tried = 0;  // component pairs examined, including the accepted one
  bool anchor_pair_used = false;     // accepted pair is the one holding the anchor
};

/// Interval extraction from a normalized weak ordering. Returns nullopt when G+ has at most two
/// non-trivial components. Requires g twin-free, connected and a 2DORG (PreconditionError); throws
/// ConsistencyError if no candidate component pair yields a buried subgraph.
std::optional<Extraction> find_buried_subgraph(const BipartiteGraph& g);
/// Same, with a caller-supplied normalized weak ordering.
std::optional<Extraction> find_buried_subgraph(const BipartiteGraph& g, const WeakOrdering& wo);

/// Outside the extracted intervals: vertices before u_left / v_left see nothing of the opposite
/// side of B, vertices after u_right / v_right see all of it or none.
bool extraction_claims_hold(const BipartiteGraph& g, const Extraction& ex);

constexpr int kBuriedEnumerationGuard = 16;

/// Every buried vertex set, sorted lexicographically. Throws GuardError above 16 vertices.
std::vector<VertexSet> enumerate_buried_subgraphs(const BipartiteGraph& g);

struct Substitution {
  BipartiteGraph graph;
  std::vector<std::optional<VertexRef>> mapping;  // by old global id; nullopt if deleted
  EdgeRef kept;                                   // the surviving edge in `graph`
};

/// G - (B \ {u, v}) for the kept edge uv of G[B]. Throws PreconditionError on bad input and
/// ConsistencyError if uv is not simplicial afterwards.
Substitution substitute_buried(const BipartiteGraph& g, const VertexSet& b, const EdgeRef& keep);

/// N(u) u N(v) induces a biclique. Throws PreconditionError if e is not an edge.
bool is_simplicial_edge(const BipartiteGraph& g, const EdgeRef& e);

}  // namespace tdorg
