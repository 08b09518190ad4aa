#include "tdorg/buried.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "tdorg/aux_graphs.hpp"
#include "tdorg/classify.hpp"
#include "tdorg/errors.hpp"

namespace tdorg {

VertexSet make_vertex_set(const BipartiteGraph& g, std::vector<VertexRef> vertices) {
  for (const auto& v : vertices) {
    const int limit = v.side == Side::U ? g.u_count() : g.v_count();
    if (v.index < 0 || v.index >= limit) throw PreconditionError("vertex " + token(v) + " is out of range");
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

std::string format_vertex_set(const VertexSet& b) {
  std::string out;
  for (const auto& v : b) {
    if (!out.empty()) out += ' ';
    out += token(v);
  }
  return out;
}

VertexSet parse_vertex_set(const BipartiteGraph& g, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<VertexRef> out;
  for (std::string tok; in >> tok;) {
    // accept "u1,v2" as well as "u1 v2"
    std::size_t start = 0;
    while (start <= tok.size()) {
      std::size_t end = tok.find(',', start);
      if (end == std::string::npos) end = tok.size();
      if (end > start) {
        auto v = parse_token(std::string_view(tok).substr(start, end - start));
        if (!v) throw PreconditionError("malformed vertex token '" + tok + "'");
        out.push_back(*v);
      }
      start = end + 1;
    }
  }
  return make_vertex_set(g, std::move(out));
}

char condition_letter(BuriedCondition c) { return static_cast<char>('a' + static_cast<int>(c)); }

namespace {

std::vector<char> membership(const BipartiteGraph& g, const VertexSet& b) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& v : b) in[static_cast<std::size_t>(g.id(v))] = 1;
  return in;
}

std::size_t neighbors_inside(const BipartiteGraph& g, const std::vector<char>& in, VertexRef a) {
  std::size_t count = 0;
  for (int j : g.neighbors(a)) count += in[g.id({opposite(a.side), j})];
  return count;
}

}  // namespace

BuriedCheck is_buried_subgraph(const BipartiteGraph& g, const VertexSet& b) {
  const auto in = membership(g, b);
  auto inside = [&](VertexRef v) { return in[g.id(v)] != 0; };
  auto edge_inside = [&](const EdgeRef& e) { return inside({Side::U, e.u}) && inside({Side::V, e.v}); };
  auto edge_outside = [&](const EdgeRef& e) { return !inside({Side::U, e.u}) && !inside({Side::V, e.v}); };

  BuriedCheck check;
  std::string reason[4];

  for (const auto& [e1, e2] : independent_edge_pairs(g)) {
    if (!check.inner_pair && edge_inside(e1) && edge_inside(e2)) check.inner_pair = std::pair{e1, e2};
    if (!check.outer_pair && edge_outside(e1)) check.outer_pair = std::pair{e1, e2};
    if (!check.outer_pair && edge_outside(e2)) check.outer_pair = std::pair{e2, e1};
  }
  check.satisfied[0] = check.inner_pair.has_value();
  if (!check.satisfied[0]) reason[0] = "G[B] contains no independent edges";

  std::size_t b_u = 0, b_v = 0;
  for (const auto& v : b) (v.side == Side::U ? b_u : b_v)++;

  check.satisfied[1] = true;
  for (const auto& a : g.vertices()) {
    if (inside(a)) continue;
    const std::size_t k = neighbors_inside(g, in, a);
    const std::size_t full = a.side == Side::U ? b_v : b_u;
    if (k != 0 && k != full) {
      check.satisfied[1] = false;
      reason[1] = token(a) + " sees " + std::to_string(k) + " of " + std::to_string(full) +
                  " vertices on the opposite side of B";
      break;
    }
  }

  check.satisfied[2] = check.outer_pair.has_value();
  if (!check.satisfied[2]) reason[2] = "no edge of G - B is independent with another edge";

  check.satisfied[3] = true;
  for (const auto& a : b) {
    const std::size_t k = neighbors_inside(g, in, a);
    const std::size_t full = a.side == Side::U ? b_v : b_u;
    if (k == 0 || k == full) {
      check.satisfied[3] = false;
      reason[3] = token(a) + (k == 0 ? " is isolated" : " is universal") + " in G[B]";
      break;
    }
  }

  check.buried = true;
  for (int c = 0; c < 4; ++c) {
    if (!check.satisfied[c]) {
      check.buried = false;
      check.violated = static_cast<BuriedCondition>(c);
      check.detail = reason[c];
      break;
    }
  }
  return check;
}

KSets k_sets(const BipartiteGraph& g, const VertexSet& b) {
  if (!is_buried_subgraph(g, b)) throw PreconditionError("k_sets: vertex set is not a buried subgraph");
  if (!is_2dorg(g)) throw PreconditionError("k_sets: graph is not a 2DORG");
  const auto in = membership(g, b);
  std::size_t b_u = 0, b_v = 0;
  for (const auto& v : b) (v.side == Side::U ? b_u : b_v)++;
  KSets k;
  for (int u = 0; u < g.u_count(); ++u) {
    const VertexRef r{Side::U, u};
    if (!in[g.id(r)] && neighbors_inside(g, in, r) == b_v) k.k_u.push_back(u);
  }
  for (int v = 0; v < g.v_count(); ++v) {
    const VertexRef r{Side::V, v};
    if (!in[g.id(r)] && neighbors_inside(g, in, r) == b_u) k.k_v.push_back(v);
  }
  for (int u : k.k_u) {
    for (int v : k.k_v) {
      if (!g.adjacent(u, v)) {
        throw ConsistencyError("k_sets: u" + std::to_string(u + 1) + " and v" + std::to_string(v + 1) +
                               " break the K-set biclique");
      }
    }
  }
  return k;
}

namespace {

BuriedSubgraph accept(const BipartiteGraph& g, VertexSet b, const BuriedCheck& check) {
  BuriedSubgraph out;
  out.inner_witness = *check.inner_pair;
  out.outer_witness = *check.outer_pair;
  out.k = k_sets(g, b);
  out.vertices = std::move(b);
  return out;
}

std::vector<int> position_of(const std::vector<int>& order) {
  std::vector<int> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  return pos;
}

}  // namespace

std::optional<Extraction> find_buried_subgraph(const BipartiteGraph& g) {
  if (!find_twins(g).empty()) throw PreconditionError("find_buried_subgraph: graph has twins");
  if (!is_connected(g)) throw PreconditionError("find_buried_subgraph: graph is disconnected");
  if (!is_2dorg(g)) throw PreconditionError("find_buried_subgraph: graph is not a 2DORG");
  if (build_g_plus(g).nontrivial_count() <= 2) return std::nullopt;
  const Representation rep = construct_normalized_representation(g);
  return find_buried_subgraph(g, weak_ordering_from_representation(g, rep));
}

std::optional<Extraction> find_buried_subgraph(const BipartiteGraph& g, const WeakOrdering& wo) {
  if (!find_twins(g).empty()) throw PreconditionError("find_buried_subgraph: graph has twins");
  if (!is_connected(g)) throw PreconditionError("find_buried_subgraph: graph is disconnected");
  if (!is_2dorg(g)) throw PreconditionError("find_buried_subgraph: graph is not a 2DORG");
  if (!is_normalized_weak_ordering(g, wo)) {
    throw PreconditionError("find_buried_subgraph: ordering is not a normalized weak ordering");
  }
  const AuxGraph aux = build_g_plus(g);
  if (aux.nontrivial_count() <= 2) return std::nullopt;

  const auto pu = position_of(wo.order_u);
  const auto pv = position_of(wo.order_v);
  auto key = [&](const EdgeRef& e) { return std::pair{pu[e.u], pv[e.v]}; };

  // Anchor: (u_alpha, v_alpha) lexicographically smallest under (<_U, <_V) among edges with an
  // independent partner; ties on the partner broken the same way.
  std::optional<std::pair<EdgeRef, EdgeRef>> anchor;
  for (const auto& [e1, e2] : independent_edge_pairs(g)) {
    for (const auto& [a, p] : {std::pair{e1, e2}, std::pair{e2, e1}}) {
      if (!anchor || std::pair{key(a), key(p)} < std::pair{key(anchor->first), key(anchor->second)}) {
        anchor = std::pair{a, p};
      }
    }
  }
  const auto& [alpha, beta] = *anchor;
  const std::size_t anchor_component =
      aux.component_of(*aux.find({{Side::U, alpha.u}, {Side::V, beta.v}}));
  const std::size_t anchor_reverse = aux.reversed_component(anchor_component);

  Extraction ex;
  ex.ordering = wo;
  ex.anchor = alpha;
  ex.anchor_partner = beta;

  // Pairs away from the anchor first; the anchor's own pair last, since an anchor edge whose
  // partners fall into several components can leave no other candidate.
  std::vector<std::size_t> candidates;
  for (std::size_t c : aux.nontrivial_components()) {
    if (c < aux.reversed_component(c) && c != anchor_component && c != anchor_reverse) candidates.push_back(c);
  }
  candidates.push_back(std::min(anchor_component, anchor_reverse));

  for (std::size_t c : candidates) {
    const std::size_t rc = aux.reversed_component(c);
    ++ex.candidates_tried;
    ex.anchor_pair_used = c == anchor_component || c == anchor_reverse;

    std::optional<int> ul, ur, vl, vr;
    auto note = [&](VertexRef x) {
      if (x.side == Side::U) {
        if (!ul || pu[x.index] < pu[*ul]) ul = x.index;
        if (!ur || pu[x.index] > pu[*ur]) ur = x.index;
      } else {
        if (!vl || pv[x.index] < pv[*vl]) vl = x.index;
        if (!vr || pv[x.index] > pv[*vr]) vr = x.index;
      }
    };
    for (std::size_t comp : {c, rc}) {
      for (std::size_t p : aux.members(comp)) {
        note(aux.pairs()[p].first);
        note(aux.pairs()[p].second);
      }
    }

    std::vector<VertexRef> members;
    for (int u = 0; u < g.u_count(); ++u) {
      if (pu[*ul] <= pu[u] && pu[u] <= pu[*ur]) members.push_back({Side::U, u});
    }
    for (int v = 0; v < g.v_count(); ++v) {
      if (pv[*vl] <= pv[v] && pv[v] <= pv[*vr]) members.push_back({Side::V, v});
    }
    VertexSet b = make_vertex_set(g, std::move(members));
    const BuriedCheck check = is_buried_subgraph(g, b);
    if (!check) continue;

    ex.subgraph = accept(g, std::move(b), check);
    ex.u_left = {Side::U, *ul};
    ex.u_right = {Side::U, *ur};
    ex.v_left = {Side::V, *vl};
    ex.v_right = {Side::V, *vr};
    if (!extraction_claims_hold(g, ex)) {
      throw ConsistencyError("find_buried_subgraph: interval claims fail for " +
                             format_vertex_set(ex.subgraph.vertices));
    }
    return ex;
  }
  throw ConsistencyError("find_buried_subgraph: G+ has " + std::to_string(aux.nontrivial_count()) +
                         " non-trivial components but no candidate interval is buried");
}

bool extraction_claims_hold(const BipartiteGraph& g, const Extraction& ex) {
  const auto pu = position_of(ex.ordering.order_u);
  const auto pv = position_of(ex.ordering.order_v);
  const auto in = membership(g, ex.subgraph.vertices);
  std::size_t b_u = 0, b_v = 0;
  for (const auto& v : ex.subgraph.vertices) (v.side == Side::U ? b_u : b_v)++;

  for (int u = 0; u < g.u_count(); ++u) {
    const std::size_t k = neighbors_inside(g, in, {Side::U, u});
    if (pu[u] < pu[ex.u_left.index] && k != 0) return false;
    if (pu[u] > pu[ex.u_right.index] && k != 0 && k != b_v) return false;
  }
  for (int v = 0; v < g.v_count(); ++v) {
    const std::size_t k = neighbors_inside(g, in, {Side::V, v});
    if (pv[v] < pv[ex.v_left.index] && k != 0) return false;
    if (pv[v] > pv[ex.v_right.index] && k != 0 && k != b_u) return false;
  }
  return true;
}

std::vector<VertexSet> enumerate_buried_subgraphs(const BipartiteGraph& g) {
  const int n = g.vertex_count();
  if (n > kBuriedEnumerationGuard) {
    throw GuardError("enumerate_buried_subgraphs: more than " + std::to_string(kBuriedEnumerationGuard) +
                     " vertices");
  }
  using Mask = std::uint32_t;
  auto bit = [&](VertexRef v) { return Mask{1} << g.id(v); };

  std::vector<Mask> nbr(static_cast<std::size_t>(n), 0);
  Mask u_mask = 0, v_mask = 0;
  for (const auto& a : g.vertices()) {
    (a.side == Side::U ? u_mask : v_mask) |= bit(a);
    for (int j : g.neighbors(a)) nbr[g.id(a)] |= bit({opposite(a.side), j});
  }
  std::vector<Mask> quads;
  std::vector<Mask> capable;  // endpoint masks of edges with an independent partner
  for (const auto& [e1, e2] : independent_edge_pairs(g)) {
    const Mask m1 = bit({Side::U, e1.u}) | bit({Side::V, e1.v});
    const Mask m2 = bit({Side::U, e2.u}) | bit({Side::V, e2.v});
    quads.push_back(m1 | m2);
    capable.push_back(m1);
    capable.push_back(m2);
  }

  std::vector<VertexSet> out;
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (Mask b = 1; b <= all && b != 0; ++b) {
    if (std::none_of(quads.begin(), quads.end(), [&](Mask q) { return (q & b) == q; })) continue;
    if (std::none_of(capable.begin(), capable.end(), [&](Mask e) { return (e & b) == 0; })) continue;
    const Mask bu = b & u_mask, bv = b & v_mask;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const Mask me = Mask{1} << i;
      const Mask opposite_part = (me & u_mask) ? bv : bu;
      const Mask seen = nbr[i] & opposite_part;
      if (b & me) {
        ok = seen != 0 && seen != opposite_part;
      } else {
        ok = seen == 0 || seen == opposite_part;
      }
    }
    if (!ok) continue;
    VertexSet set;
    for (int i = 0; i < n; ++i) {
      if (b & (Mask{1} << i)) set.push_back(g.ref(i));
    }
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Substitution substitute_buried(const BipartiteGraph& g, const VertexSet& b, const EdgeRef& keep) {
  if (!g.find_edge(keep.u, keep.v)) throw PreconditionError("substitute_buried: kept pair is not an edge");
  const VertexRef ku{Side::U, keep.u}, kv{Side::V, keep.v};
  if (!std::binary_search(b.begin(), b.end(), ku) || !std::binary_search(b.begin(), b.end(), kv)) {
    throw PreconditionError("substitute_buried: kept edge " + token(keep) + " is not inside B");
  }
  if (auto check = is_buried_subgraph(g, b); !check) {
    throw PreconditionError("substitute_buried: B violates condition (" +
                            std::string(1, condition_letter(*check.violated)) + "): " + check.detail);
  }
  const auto in = membership(g, b);
  std::vector<int> keep_ids;
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (!in[i] || i == g.id(ku) || i == g.id(kv)) keep_ids.push_back(i);
  }
  Substitution out{induced_subgraph(g, keep_ids), std::vector<std::optional<VertexRef>>(in.size()), {}};
  int nu = 0, nv = 0;
  for (int i : keep_ids) {
    out.mapping[i] = g.ref(i).side == Side::U ? VertexRef{Side::U, nu++} : VertexRef{Side::V, nv++};
  }
  out.kept = *out.graph.find_edge(out.mapping[g.id(ku)]->index, out.mapping[g.id(kv)]->index);
  if (!is_simplicial_edge(out.graph, out.kept)) {
    throw ConsistencyError("substitute_buried: kept edge is not simplicial after substitution");
  }
  return out;
}

bool is_simplicial_edge(const BipartiteGraph& g, const EdgeRef& e) {
  if (!g.find_edge(e.u, e.v)) throw PreconditionError("is_simplicial_edge: not an edge");
  for (int u : g.neighbors({Side::V, e.v})) {
    for (int v : g.neighbors({Side::U, e.u})) {
      if (!g.adjacent(u, v)) return false;
    }
  }
  return true;
}

}  // namespace tdorg
