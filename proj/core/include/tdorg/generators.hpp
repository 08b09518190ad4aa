#pragma once

#include <cstdint>

#include "tdorg/graph.hpp"
#include "tdorg/representation.hpp"

namespace tdorg {

struct GeneratedGraph {
  BipartiteGraph graph;
  Representation representation;  // realizes `graph`
};

/// Two independent uniform shuffles of all vertices give (<_x, <_y); adjacency follows.
/// The result may contain twins.
GeneratedGraph random_2dorg(int u_count, int v_count, std::uint64_t seed);

/// Each cross pair is an edge independently with probability p.
BipartiteGraph random_bipartite(int u_count, int v_count, double edge_probability, std::uint64_t seed);

}  // namespace tdorg
