#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "tdorg/aux_graphs.hpp"
#include "tdorg/buried.hpp"
#include "tdorg/graph.hpp"

namespace tdorg {

struct Recognition {
  bool is_2dorg = false;
  std::optional<OrderedPair> witness;  // invertible pair when not a 2DORG
  bool g_star_only = false;            // G+ exceeded its size guard; G* decided alone

  explicit operator bool() const noexcept { return is_2dorg; }
};

/// No invertible pair in G+, cross-checked against bipartiteness of G*. Throws ConsistencyError
/// if the two tests disagree.
Recognition recognize(const BipartiteGraph& g);
bool is_2dorg(const BipartiteGraph& g);

/// Connected: exactly two non-trivial G+ components. At least two non-trivial components of G:
/// exactly two, each a chain graph (cross-checked against G+). A single non-trivial component
/// plus isolated vertices follows the connected rule. Requires twin-free 2DORG input
/// (PreconditionError).
bool is_uniquely_representable(const BipartiteGraph& g);

/// Number of transitive orientations of I(g); graphs with at most 8 vertices are cross-checked
/// against the naive oracle. Requires twin-free 2DORG input; GuardError above 20 class pairs.
std::size_t count_normalized_representations(const BipartiteGraph& g);

struct ClassificationReport {
  Recognition recognition;
  bool connected = false;
  bool twin_free = false;
  bool chain_graph = false;
  std::size_t nontrivial_g_components = 0;
  std::optional<std::size_t> nontrivial_gplus_components;
  std::optional<bool> uniquely_representable;            // twin-free 2DORGs only
  std::optional<std::size_t> normalized_representation_count;  // within the class-pair guard
  std::optional<VertexSet> buried_subgraph;                // connected twin-free 2DORGs only
};

/// Throws ConsistencyError if the collected facts contradict each other.
ClassificationReport classify(const BipartiteGraph& g);

/// One "key: value" line per field.
std::string format_report(const ClassificationReport& r);

}  // namespace tdorg
