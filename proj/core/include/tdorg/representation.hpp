#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tdorg/graph.hpp"

namespace tdorg {

class IndependenceGraph;
class Orientation;

/// A pair of linear orders (<_x, <_y) on all vertices, smallest first.
struct Representation {
  std::vector<VertexRef> order_x;
  std::vector<VertexRef> order_y;

  friend auto operator<=>(const Representation&, const Representation&) = default;
};

/// Linear orders <_U on U and <_V on V, as side-local indices, smallest first.
struct WeakOrdering {
  std::vector<int> order_u;
  std::vector<int> order_v;

  friend bool operator==(const WeakOrdering&, const WeakOrdering&) = default;
};

/// `x: u1 v1 ...` / `y: ...` text. Tokens are positional and 1-based.
std::string format_representation(const Representation& rep);
/// Throws ParseError unless both lines are permutations of V(g).
Representation parse_representation(std::string_view text, const BipartiteGraph& g);

/// Position of every vertex (by global id) in `order`.
std::vector<int> ranks(const BipartiteGraph& g, const std::vector<VertexRef>& order);

/// uv is an edge iff u <_x v and u <_y v. Throws PreconditionError if the orders do not cover V(g).
bool realizes(const BipartiteGraph& g, const Representation& rep);

enum class NormalCondition { A, B, C };

struct NormalizationViolation {
  NormalCondition condition;
  VertexRef first;   // u1 / v1 / u
  VertexRef second;  // u2 / v2 / v
};

struct NormalizationCheck {
  bool normalized = false;
  std::optional<NormalizationViolation> violation;

  explicit operator bool() const noexcept { return normalized; }
};

std::string describe(const NormalizationViolation& v);

/// Evaluates the three normalization biconditionals over all vertex pairs and reports
/// the first violation in (condition, first, second) order. Throws PreconditionError
/// if `rep` does not realize `g`.
NormalizationCheck is_normalized(const BipartiteGraph& g, const Representation& rep);

/// (v, u) is forced before u in both orders: every v' in N(u) has N(v) strictly inside N(v').
bool dominated_by_all_neighbors(const BipartiteGraph& g, int v, int u);

/// The orientation-independent arcs D and the orientation-induced arcs D(F), on global ids.
struct ForcedOrder {
  std::vector<std::pair<int, int>> forced;
  std::vector<std::pair<int, int>> induced;
};

/// Throws PreconditionError on twins, ConsistencyError if D + D(F) or D + D(F)^-1 is not a
/// tournament (the message names the offending pair).
ForcedOrder build_forced_order(const BipartiteGraph& g, const IndependenceGraph& ig, const Orientation& f);

/// order_x from D + D(F), order_y from D + D(F)^-1. Throws ConsistencyError on a cycle or if the
/// result fails realizes / is_normalized.
Representation representation_from_orientation(const BipartiteGraph& g, const IndependenceGraph& ig,
                                                const Orientation& f);

/// Normalized representation for the canonical transitive orientation of I(g).
/// Throws PreconditionError on twins or when g has an invertible pair.
Representation construct_normalized_representation(const BipartiteGraph& g);

Representation reverse_representation(const Representation& rep);

/// u1 <_U u2 iff u1 >_y u2; v1 <_V v2 iff v1 <_x v2. Requires a normalized representation.
WeakOrdering weak_ordering_from_representation(const BipartiteGraph& g, const Representation& rep);

bool is_weak_ordering(const BipartiteGraph& g, const WeakOrdering& wo);
bool is_normalized_weak_ordering(const BipartiteGraph& g, const WeakOrdering& wo);

/// For every independent pair u1v1, u2v2 checks u1 <_x v2 <=> v2 <_y u1 <=> u2 <_y v1 <=> v1 <_x u2.
/// Returns the first pair that breaks the chain.
std::optional<std::pair<EdgeRef, EdgeRef>> interleaving_violation(const BipartiteGraph& g,
                                                                  const Representation& rep);

}  // namespace tdorg
