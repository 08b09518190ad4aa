#include "tdorg/representation.hpp"

#include <algorithm>
#include <sstream>

#include "tdorg/aux_graphs.hpp"
#include "tdorg/errors.hpp"
#include "tdorg/independence.hpp"

namespace tdorg {

namespace {

bool covers(const BipartiteGraph& g, const std::vector<VertexRef>& order) {
  if (order.size() != static_cast<std::size_t>(g.vertex_count())) return false;
  std::vector<char> seen(order.size(), 0);
  for (const auto& v : order) {
    const int limit = v.side == Side::U ? g.u_count() : g.v_count();
    if (v.index < 0 || v.index >= limit) return false;
    char& s = seen[static_cast<std::size_t>(g.id(v))];
    if (s) return false;
    s = 1;
  }
  return true;
}

void require_cover(const BipartiteGraph& g, const Representation& rep) {
  if (!covers(g, rep.order_x) || !covers(g, rep.order_y)) {
    throw PreconditionError("representation does not cover the vertex set exactly once per order");
  }
}

std::string format_order(const std::vector<VertexRef>& order) {
  std::string out;
  for (const auto& v : order) {
    out += ' ';
    out += token(v);
  }
  return out;
}

/// Same-side neighborhood inclusion table, indexed by global ids.
class InclusionTable {
 public:
  explicit InclusionTable(const BipartiteGraph& g)
      : n_(static_cast<std::size_t>(g.vertex_count())), subset_(n_ * n_, 0) {
    for (int a = 0; a < g.vertex_count(); ++a) {
      for (int b = 0; b < g.vertex_count(); ++b) {
        const VertexRef ra = g.ref(a), rb = g.ref(b);
        if (a != b && ra.side == rb.side && tdorg::proper_subset(g, ra, rb)) subset_[a * n_ + b] = 1;
      }
    }
  }
  /// N(a) strictly inside N(b).
  bool proper_subset(int a, int b) const { return subset_[static_cast<std::size_t>(a) * n_ + b] != 0; }

 private:
  std::size_t n_;
  std::vector<char> subset_;
};

bool dominated(const BipartiteGraph& g, const InclusionTable& inc, int v, int u) {
  for (int w : g.neighbors(g.ref(u))) {
    if (!inc.proper_subset(v, g.id({Side::V, w}))) return false;
  }
  return true;
}

void require_twin_free(const BipartiteGraph& g) {
  auto twins = find_twins(g);
  if (!twins.empty()) {
    throw PreconditionError("graph has twins " + token(twins.front().first) + " and " +
                            token(twins.front().second));
  }
}

/// Direction matrix for a tournament under construction.
class Tournament {
 public:
  explicit Tournament(std::size_t n) : n_(n), arc_(n * n, 0) {}

  void add(int a, int b, const BipartiteGraph& g, const char* what) {
    if (arc_[static_cast<std::size_t>(b) * n_ + a]) {
      throw ConsistencyError(std::string(what) + ": pair " + token(g.ref(a)) + ", " + token(g.ref(b)) +
                             " is directed both ways");
    }
    arc_[static_cast<std::size_t>(a) * n_ + b] = 1;
  }
  bool has(int a, int b) const { return arc_[static_cast<std::size_t>(a) * n_ + b] != 0; }

  void require_complete(const BipartiteGraph& g, const char* what) const {
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = a + 1; b < n_; ++b) {
        if (!arc_[a * n_ + b] && !arc_[b * n_ + a]) {
          throw ConsistencyError(std::string(what) + ": pair " + token(g.ref(static_cast<int>(a))) + ", " +
                                 token(g.ref(static_cast<int>(b))) + " is not covered");
        }
      }
    }
  }

  /// The unique topological order of an acyclic tournament: decreasing out-degree.
  std::vector<int> topological_order(const char* what) const {
    std::vector<std::vector<int>> by_outdegree(n_);
    for (std::size_t a = 0; a < n_; ++a) {
      std::size_t out = 0;
      for (std::size_t b = 0; b < n_; ++b) out += arc_[a * n_ + b];
      by_outdegree[out].push_back(static_cast<int>(a));
    }
    std::vector<int> order;
    for (std::size_t d = n_; d-- > 0;) {
      if (by_outdegree[d].size() != 1) {
        throw ConsistencyError(std::string(what) + ": tournament contains a directed cycle");
      }
      order.push_back(by_outdegree[d].front());
    }
    return order;
  }

 private:
  std::size_t n_;
  std::vector<char> arc_;
};

struct TournamentPair {
  Tournament with_f;
  Tournament with_reverse;
};

TournamentPair assemble(const BipartiteGraph& g, const ForcedOrder& order) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  TournamentPair t{Tournament(n), Tournament(n)};
  for (const auto& [a, b] : order.forced) {
    t.with_f.add(a, b, g, "D");
    t.with_reverse.add(a, b, g, "D");
  }
  for (const auto& [a, b] : order.induced) {
    t.with_f.add(a, b, g, "D + D(F)");
    t.with_reverse.add(b, a, g, "D + D(F)^-1");
  }
  t.with_f.require_complete(g, "D + D(F)");
  t.with_reverse.require_complete(g, "D + D(F)^-1");
  return t;
}

}  // namespace

std::string format_representation(const Representation& rep) {
  return "x:" + format_order(rep.order_x) + "\ny:" + format_order(rep.order_y) + "\n";
}

Representation parse_representation(std::string_view text, const BipartiteGraph& g) {
  Representation rep;
  bool have_x = false, have_y = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::istringstream in{std::string(line)};
    std::string head;
    if (!(in >> head)) continue;
    if (head == "c") continue;
    std::vector<VertexRef>* target = nullptr;
    if (head == "x:") {
      if (have_x) throw ParseError(line_no, "duplicate x line");
      target = &rep.order_x;
      have_x = true;
    } else if (head == "y:") {
      if (have_y) throw ParseError(line_no, "duplicate y line");
      target = &rep.order_y;
      have_y = true;
    } else {
      throw ParseError(line_no, "expected 'x:' or 'y:'");
    }
    for (std::string tok; in >> tok;) {
      auto v = parse_token(tok);
      if (!v) throw ParseError(line_no, "malformed vertex token '" + tok + "'");
      target->push_back(*v);
    }
    if (!covers(g, *target)) throw ParseError(line_no, "order is not a permutation of all vertices");
  }
  if (!have_x || !have_y) throw ParseError(line_no, "representation needs both 'x:' and 'y:' lines");
  return rep;
}

std::vector<int> ranks(const BipartiteGraph& g, const std::vector<VertexRef>& order) {
  std::vector<int> r(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) r[static_cast<std::size_t>(g.id(order[i]))] = static_cast<int>(i);
  return r;
}

bool realizes(const BipartiteGraph& g, const Representation& rep) {
  require_cover(g, rep);
  const auto rx = ranks(g, rep.order_x);
  const auto ry = ranks(g, rep.order_y);
  for (int u = 0; u < g.u_count(); ++u) {
    for (int v = 0; v < g.v_count(); ++v) {
      const int a = g.id({Side::U, u}), b = g.id({Side::V, v});
      const bool below = rx[a] < rx[b] && ry[a] < ry[b];
      if (below != g.adjacent(u, v)) return false;
    }
  }
  return true;
}

std::string describe(const NormalizationViolation& v) {
  const char c = v.condition == NormalCondition::A ? 'a' : v.condition == NormalCondition::B ? 'b' : 'c';
  return std::string("condition (") + c + ") on (" + token(v.first) + ", " + token(v.second) + ")";
}

bool dominated_by_all_neighbors(const BipartiteGraph& g, int v, int u) {
  for (int w : g.neighbors({Side::U, u})) {
    if (!proper_subset(g, {Side::V, v}, {Side::V, w})) return false;
  }
  return true;
}

NormalizationCheck is_normalized(const BipartiteGraph& g, const Representation& rep) {
  if (!realizes(g, rep)) throw PreconditionError("is_normalized: representation does not realize the graph");
  const auto rx = ranks(g, rep.order_x);
  const auto ry = ranks(g, rep.order_y);
  const InclusionTable inc(g);
  auto both_before = [&](int a, int b) { return rx[a] < rx[b] && ry[a] < ry[b]; };

  for (int i = 0; i < g.u_count(); ++i) {
    for (int j = 0; j < g.u_count(); ++j) {
      if (i == j) continue;
      const int a = g.id({Side::U, i}), b = g.id({Side::U, j});
      if (both_before(a, b) != inc.proper_subset(b, a)) {
        return {false, NormalizationViolation{NormalCondition::A, {Side::U, i}, {Side::U, j}}};
      }
    }
  }
  for (int i = 0; i < g.v_count(); ++i) {
    for (int j = 0; j < g.v_count(); ++j) {
      if (i == j) continue;
      const int a = g.id({Side::V, i}), b = g.id({Side::V, j});
      if (both_before(a, b) != inc.proper_subset(a, b)) {
        return {false, NormalizationViolation{NormalCondition::B, {Side::V, i}, {Side::V, j}}};
      }
    }
  }
  for (int u = 0; u < g.u_count(); ++u) {
    for (int v = 0; v < g.v_count(); ++v) {
      const int a = g.id({Side::U, u}), b = g.id({Side::V, v});
      if (both_before(b, a) != dominated(g, inc, b, u)) {
        return {false, NormalizationViolation{NormalCondition::C, {Side::U, u}, {Side::V, v}}};
      }
    }
  }
  return {true, std::nullopt};
}

ForcedOrder build_forced_order(const BipartiteGraph& g, const IndependenceGraph& ig, const Orientation& f) {
  require_twin_free(g);
  if (f.size() != ig.edge_count() || !is_transitive(ig, f)) {
    throw PreconditionError("build_forced_order: orientation is not a transitive orientation of I(G)");
  }
  const InclusionTable inc(g);
  ForcedOrder out;
  for (const auto& e : g.edges()) out.forced.emplace_back(g.id({Side::U, e.u}), g.id({Side::V, e.v}));
  for (int a = 0; a < g.vertex_count(); ++a) {
    for (int b = 0; b < g.vertex_count(); ++b) {
      if (a == b || g.ref(a).side != g.ref(b).side) continue;
      if (g.ref(a).side == Side::U ? inc.proper_subset(b, a) : inc.proper_subset(a, b)) {
        out.forced.emplace_back(a, b);
      }
    }
  }
  for (int v = 0; v < g.v_count(); ++v) {
    for (int u = 0; u < g.u_count(); ++u) {
      const int vid = g.id({Side::V, v});
      if (dominated(g, inc, vid, u)) out.forced.emplace_back(vid, g.id({Side::U, u}));
    }
  }
  for (const auto& [from, to] : f.arcs(ig)) {
    const EdgeRef& e1 = g.edge(from);
    const EdgeRef& e2 = g.edge(to);
    const int u1 = g.id({Side::U, e1.u}), v1 = g.id({Side::V, e1.v});
    const int u2 = g.id({Side::U, e2.u}), v2 = g.id({Side::V, e2.v});
    out.induced.insert(out.induced.end(), {{u1, u2}, {u1, v2}, {v1, u2}, {v1, v2}});
  }
  std::sort(out.forced.begin(), out.forced.end());
  std::sort(out.induced.begin(), out.induced.end());
  out.induced.erase(std::unique(out.induced.begin(), out.induced.end()), out.induced.end());
  assemble(g, out);
  return out;
}

Representation representation_from_orientation(const BipartiteGraph& g, const IndependenceGraph& ig,
                                                const Orientation& f) {
  const ForcedOrder order = build_forced_order(g, ig, f);
  const TournamentPair t = assemble(g, order);
  Representation rep;
  for (int a : t.with_f.topological_order("D + D(F)")) rep.order_x.push_back(g.ref(a));
  for (int a : t.with_reverse.topological_order("D + D(F)^-1")) rep.order_y.push_back(g.ref(a));
  if (!realizes(g, rep)) throw ConsistencyError("constructed orders do not realize the graph");
  if (auto check = is_normalized(g, rep); !check) {
    throw ConsistencyError("constructed representation violates " + describe(*check.violation));
  }
  return rep;
}

Representation construct_normalized_representation(const BipartiteGraph& g) {
  require_twin_free(g);
  if (cross_pair_count(g) <= kAuxPairGuard) {
    if (auto witness = find_invertible_pair(g)) {
      throw PreconditionError("not a 2DORG: invertible pair " + token(*witness));
    }
  } else if (!g_star_is_bipartite(g)) {
    throw PreconditionError("not a 2DORG: G* is not bipartite");
  }
  const IndependenceGraph ig = build_independence_graph(g);
  return representation_from_orientation(g, ig, transitive_orientation(ig));
}

Representation reverse_representation(const Representation& rep) { return Representation{rep.order_y, rep.order_x}; }

WeakOrdering weak_ordering_from_representation(const BipartiteGraph& g, const Representation& rep) {
  if (!realizes(g, rep) || !is_normalized(g, rep)) {
    throw PreconditionError("weak_ordering_from_representation: representation is not normalized");
  }
  WeakOrdering wo;
  for (auto it = rep.order_y.rbegin(); it != rep.order_y.rend(); ++it) {
    if (it->side == Side::U) wo.order_u.push_back(it->index);
  }
  for (const auto& v : rep.order_x) {
    if (v.side == Side::V) wo.order_v.push_back(v.index);
  }
  return wo;
}

namespace {

std::vector<int> positions(const std::vector<int>& order, int n) {
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  if (order.size() != static_cast<std::size_t>(n)) throw PreconditionError("weak ordering does not cover its side");
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int x = order[i];
    if (x < 0 || x >= n || pos[x] >= 0) throw PreconditionError("weak ordering does not cover its side");
    pos[x] = static_cast<int>(i);
  }
  return pos;
}

}  // namespace

bool is_weak_ordering(const BipartiteGraph& g, const WeakOrdering& wo) {
  positions(wo.order_u, g.u_count());
  positions(wo.order_v, g.v_count());
  const auto& us = wo.order_u;
  const auto& vs = wo.order_v;
  for (std::size_t i = 0; i < us.size(); ++i) {
    for (std::size_t j = i + 1; j < us.size(); ++j) {
      const int u1 = us[i], u2 = us[j];
      for (std::size_t k = 0; k < vs.size(); ++k) {
        if (!g.adjacent(u2, vs[k])) continue;
        for (std::size_t l = k + 1; l < vs.size(); ++l) {
          if (g.adjacent(u1, vs[l]) && !g.adjacent(u2, vs[l])) return false;
        }
      }
    }
  }
  return true;
}

bool is_normalized_weak_ordering(const BipartiteGraph& g, const WeakOrdering& wo) {
  if (!is_weak_ordering(g, wo)) return false;
  const auto pu = positions(wo.order_u, g.u_count());
  const auto pv = positions(wo.order_v, g.v_count());
  for (int a = 0; a < g.u_count(); ++a) {
    for (int b = 0; b < g.u_count(); ++b) {
      if (a != b && proper_subset(g, {Side::U, a}, {Side::U, b}) && pu[a] > pu[b]) return false;
    }
  }
  for (int a = 0; a < g.v_count(); ++a) {
    for (int b = 0; b < g.v_count(); ++b) {
      if (a != b && proper_subset(g, {Side::V, a}, {Side::V, b}) && pv[a] > pv[b]) return false;
    }
  }
  return true;
}

std::optional<std::pair<EdgeRef, EdgeRef>> interleaving_violation(const BipartiteGraph& g,
                                                                  const Representation& rep) {
  require_cover(g, rep);
  const auto rx = ranks(g, rep.order_x);
  const auto ry = ranks(g, rep.order_y);
  for (const auto& [e1, e2] : independent_edge_pairs(g)) {
    const int u1 = g.id({Side::U, e1.u}), v1 = g.id({Side::V, e1.v});
    const int u2 = g.id({Side::U, e2.u}), v2 = g.id({Side::V, e2.v});
    const bool a = rx[u1] < rx[v2];
    const bool b = ry[v2] < ry[u1];
    const bool c = ry[u2] < ry[v1];
    const bool d = rx[v1] < rx[u2];
    if (a != b || b != c || c != d) return std::pair{e1, e2};
  }
  return std::nullopt;
}

}  // namespace tdorg
