#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "tdorg/graph.hpp"
#include "tdorg/representation.hpp"

namespace fixtures {

// Edges are given 1-based, as in the file format.
inline tdorg::BipartiteGraph make(int nu, int nv, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : edges) e.emplace_back(u - 1, v - 1);
  return tdorg::BipartiteGraph(nu, nv, e);
}

// Equal up to display labels.
inline bool same_structure(const tdorg::BipartiteGraph& a, const tdorg::BipartiteGraph& b) {
  return a.u_count() == b.u_count() && a.v_count() == b.v_count() && a.edges() == b.edges();
}

inline tdorg::BipartiteGraph g_e() { return make(3, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {3, 3}}); }

inline tdorg::BipartiteGraph g_s() {
  return make(5, 5, {{1, 1}, {1, 2}, {1, 4}, {1, 5}, {2, 2}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {3, 5}, {4, 4}, {5, 5}});
}

inline tdorg::BipartiteGraph p4() { return make(2, 2, {{1, 1}, {2, 1}, {2, 2}}); }

inline tdorg::BipartiteGraph c6() { return make(3, 3, {{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {1, 3}}); }

inline tdorg::BipartiteGraph g_2k2() { return make(2, 2, {{1, 1}, {2, 2}}); }

inline tdorg::VertexRef u(int i) { return {tdorg::Side::U, i - 1}; }
inline tdorg::VertexRef v(int j) { return {tdorg::Side::V, j - 1}; }

inline tdorg::EdgeRef edge(const tdorg::BipartiteGraph& g, int i, int j) { return *g.find_edge(i - 1, j - 1); }

inline tdorg::Representation rep(const tdorg::BipartiteGraph& g, const std::string& x, const std::string& y) {
  return tdorg::parse_representation("x: " + x + "\ny: " + y + "\n", g);
}

// Two representations of G_E, and two of G_S (the second is the first with x and y swapped).
inline const char* const kR1x = "u1 v1 u2 v2 u3 v3";
inline const char* const kR1y = "u1 v1 u3 v3 u2 v2";
inline const char* const kR2x = "u2 u1 v1 v2 u3 v3";
inline const char* const kR2y = "u3 u1 v3 v1 u2 v2";
inline const char* const kSTopX = "u1 v1 u2 v2 u3 v3 u4 v4 u5 v5";
inline const char* const kSTopY = "u3 v3 u1 v1 u2 v2 u5 v5 u4 v4";
inline const char* const kSBottomX = "u3 v3 u1 v1 u2 v2 u5 v5 u4 v4";
inline const char* const kSBottomY = "u1 v1 u2 v2 u3 v3 u4 v4 u5 v5";

}  // namespace fixtures
