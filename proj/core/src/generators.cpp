#include "tdorg/generators.hpp"

#include <algorithm>
#include <random>

#include "tdorg/errors.hpp"

namespace tdorg {

GeneratedGraph random_2dorg(int u_count, int v_count, std::uint64_t seed) {
  if (u_count < 0 || v_count < 0) throw PreconditionError("random_2dorg: negative vertex count");
  std::mt19937_64 rng(seed);
  BipartiteGraph shape(u_count, v_count, {});
  Representation rep;
  rep.order_x = shape.vertices();
  rep.order_y = shape.vertices();
  std::shuffle(rep.order_x.begin(), rep.order_x.end(), rng);
  std::shuffle(rep.order_y.begin(), rep.order_y.end(), rng);

  const auto rx = ranks(shape, rep.order_x);
  const auto ry = ranks(shape, rep.order_y);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < u_count; ++u) {
    for (int v = 0; v < v_count; ++v) {
      const int a = shape.id({Side::U, u}), b = shape.id({Side::V, v});
      if (rx[a] < rx[b] && ry[a] < ry[b]) edges.emplace_back(u, v);
    }
  }
  return GeneratedGraph{BipartiteGraph(u_count, v_count, edges), std::move(rep)};
}

BipartiteGraph random_bipartite(int u_count, int v_count, double edge_probability, std::uint64_t seed) {
  if (u_count < 0 || v_count < 0) throw PreconditionError("random_bipartite: negative vertex count");
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw PreconditionError("random_bipartite: edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < u_count; ++u) {
    for (int v = 0; v < v_count; ++v) {
      if (coin(rng) < edge_probability) edges.emplace_back(u, v);
    }
  }
  return BipartiteGraph(u_count, v_count, edges);
}

}  // namespace tdorg
