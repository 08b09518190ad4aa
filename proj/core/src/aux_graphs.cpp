#include "tdorg/aux_graphs.hpp"

#include <algorithm>
#include <numeric>

#include "tdorg/errors.hpp"

namespace tdorg {

OrderedPair reversed(const OrderedPair& p) { return OrderedPair{p.second, p.first}; }

std::string token(const OrderedPair& p) { return "(" + token(p.first) + "," + token(p.second) + ")"; }

std::size_t cross_pair_count(const BipartiteGraph& g) {
  return 2 * (static_cast<std::size_t>(g.u_count()) * static_cast<std::size_t>(g.v_count()) - g.edge_count());
}

namespace {

/// Dense index of the non-adjacent cross pairs in canonical order.
struct PairIndex {
  std::vector<OrderedPair> pairs;
  std::vector<std::ptrdiff_t> uv;
  std::vector<std::ptrdiff_t> vu;
  int nu = 0;
  int nv = 0;

  explicit PairIndex(const BipartiteGraph& g) : nu(g.u_count()), nv(g.v_count()) {
    const std::size_t cells = static_cast<std::size_t>(nu) * static_cast<std::size_t>(nv);
    uv.assign(cells, -1);
    vu.assign(cells, -1);
    pairs.reserve(cross_pair_count(g));
    for (int u = 0; u < nu; ++u) {
      for (int v = 0; v < nv; ++v) {
        if (g.adjacent(u, v)) continue;
        uv[static_cast<std::size_t>(u) * nv + v] = static_cast<std::ptrdiff_t>(pairs.size());
        pairs.push_back({{Side::U, u}, {Side::V, v}});
      }
    }
    for (int v = 0; v < nv; ++v) {
      for (int u = 0; u < nu; ++u) {
        if (g.adjacent(u, v)) continue;
        vu[static_cast<std::size_t>(v) * nu + u] = static_cast<std::ptrdiff_t>(pairs.size());
        pairs.push_back({{Side::V, v}, {Side::U, u}});
      }
    }
  }

  std::ptrdiff_t lookup(VertexRef a, VertexRef b) const {
    if (a.side == b.side) return -1;
    if (a.side == Side::U) return uv[static_cast<std::size_t>(a.index) * nv + b.index];
    return vu[static_cast<std::size_t>(a.index) * nu + b.index];
  }
};

}  // namespace

std::optional<std::size_t> AuxGraph::find(const OrderedPair& p) const {
  const VertexRef a = p.first, b = p.second;
  if (a.side == b.side) return std::nullopt;
  std::ptrdiff_t idx = -1;
  if (a.side == Side::U) {
    if (a.index >= u_count_ || b.index >= v_count_) return std::nullopt;
    idx = uv_index_[static_cast<std::size_t>(a.index) * v_count_ + b.index];
  } else {
    if (a.index >= v_count_ || b.index >= u_count_) return std::nullopt;
    idx = vu_index_[static_cast<std::size_t>(a.index) * u_count_ + b.index];
  }
  if (idx < 0) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

std::size_t AuxGraph::nontrivial_count() const {
  return static_cast<std::size_t>(std::count(nontrivial_.begin(), nontrivial_.end(), 1));
}

std::vector<std::size_t> AuxGraph::nontrivial_components() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < members_.size(); ++c) {
    if (nontrivial_[c]) out.push_back(c);
  }
  return out;
}

AuxGraph build_g_plus(const BipartiteGraph& g) {
  const std::size_t expected = cross_pair_count(g);
  if (expected > kAuxPairGuard) {
    throw GuardError("build_g_plus: " + std::to_string(expected) + " cross pairs exceed the guard of " +
                     std::to_string(kAuxPairGuard));
  }
  PairIndex index(g);
  AuxGraph aux;
  aux.u_count_ = g.u_count();
  aux.v_count_ = g.v_count();
  aux.pairs_ = std::move(index.pairs);
  aux.uv_index_ = std::move(index.uv);
  aux.vu_index_ = std::move(index.vu);
  const std::size_t n = aux.pairs_.size();

  aux.reverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) aux.reverse_[i] = *aux.find(reversed(aux.pairs_[i]));

  // Each independent pair u1v1, u2v2 contributes (u1,v2)~(v1,u2) and (u2,v1)~(v2,u1);
  // every G+ edge arises this way.
  aux.adjacency_.assign(n, {});
  for (const auto& [e1, e2] : independent_edge_pairs(g)) {
    const std::size_t a = *aux.find({{Side::U, e1.u}, {Side::V, e2.v}});
    const std::size_t b = *aux.find({{Side::V, e1.v}, {Side::U, e2.u}});
    const std::size_t c = *aux.find({{Side::U, e2.u}, {Side::V, e1.v}});
    const std::size_t d = *aux.find({{Side::V, e2.v}, {Side::U, e1.u}});
    aux.adjacency_[a].push_back(b);
    aux.adjacency_[b].push_back(a);
    aux.adjacency_[c].push_back(d);
    aux.adjacency_[d].push_back(c);
    aux.edge_count_ += 2;
  }
  for (auto& adj : aux.adjacency_) std::sort(adj.begin(), adj.end());

  // Components in pair order, so each is numbered by its smallest member.
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  aux.component_.assign(n, kUnset);
  for (std::size_t s = 0; s < n; ++s) {
    if (aux.component_[s] != kUnset) continue;
    const std::size_t c = aux.members_.size();
    aux.members_.emplace_back();
    std::vector<std::size_t> stack{s};
    aux.component_[s] = c;
    bool has_edge = false;
    while (!stack.empty()) {
      const std::size_t p = stack.back();
      stack.pop_back();
      aux.members_[c].push_back(p);
      for (std::size_t q : aux.adjacency_[p]) {
        has_edge = true;
        if (aux.component_[q] == kUnset) {
          aux.component_[q] = c;
          stack.push_back(q);
        }
      }
    }
    std::sort(aux.members_[c].begin(), aux.members_[c].end());
    aux.nontrivial_.push_back(has_edge ? 1 : 0);
  }

  aux.reversed_component_.resize(aux.members_.size());
  for (std::size_t c = 0; c < aux.members_.size(); ++c) {
    const std::size_t target = aux.component_[aux.reverse_[aux.members_[c].front()]];
    for (std::size_t p : aux.members_[c]) {
      if (aux.component_[aux.reverse_[p]] != target) {
        throw ConsistencyError("build_g_plus: reversal does not map components onto components");
      }
    }
    aux.reversed_component_[c] = target;
  }
  return aux;
}

std::optional<OrderedPair> find_invertible_pair(const AuxGraph& aux) {
  for (std::size_t p = 0; p < aux.pair_count(); ++p) {
    if (aux.component_of(p) == aux.component_of(aux.reverse_of(p))) return aux.pairs()[p];
  }
  return std::nullopt;
}

std::optional<OrderedPair> find_invertible_pair(const BipartiteGraph& g) {
  return find_invertible_pair(build_g_plus(g));
}

bool has_invertible_pair(const BipartiteGraph& g) { return find_invertible_pair(g).has_value(); }

bool g_star_is_bipartite(const BipartiteGraph& g) {
  PairIndex index(g);
  const std::size_t n = index.pairs.size();
  std::vector<signed char> color(n, -1);
  std::vector<std::size_t> stack;

  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    stack.assign(1, s);
    while (!stack.empty()) {
      const std::size_t p = stack.back();
      stack.pop_back();
      const auto [a, b] = index.pairs[p];
      auto visit = [&](std::ptrdiff_t q) {
        if (q < 0) return true;
        const auto qi = static_cast<std::size_t>(q);
        if (color[qi] < 0) {
          color[qi] = static_cast<signed char>(1 - color[p]);
          stack.push_back(qi);
          return true;
        }
        return color[qi] != color[p];
      };
      if (!visit(index.lookup(b, a))) return false;
      // (a, b) ~ (c, d) with d in N(a), c in N(b), cd not an edge.
      const Side side_d = opposite(a.side);
      const Side side_c = opposite(b.side);
      for (int c : g.neighbors(b)) {
        for (int d : g.neighbors(a)) {
          if (!visit(index.lookup({side_c, c}, {side_d, d}))) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace tdorg
