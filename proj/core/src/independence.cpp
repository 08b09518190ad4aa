#include "tdorg/independence.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tdorg/errors.hpp"

namespace tdorg {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

IndependenceGraph::Arc IndependenceGraph::arc(std::size_t id) const {
  const auto& [lo, hi] = edges_[id / 2];
  return id % 2 == 0 ? Arc{lo, hi} : Arc{hi, lo};
}

std::size_t IndependenceGraph::arc_id(int from, int to) const {
  const int k = edge_index(from, to);
  if (k < 0) throw PreconditionError("arc_id: not an edge of the independence graph");
  return 2 * static_cast<std::size_t>(k) + (from < to ? 0 : 1);
}

IndependenceGraph build_independence_graph(const BipartiteGraph& g) {
  IndependenceGraph ig;
  const int m = static_cast<int>(g.edge_count());
  ig.vertex_count_ = m;
  ig.index_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), -1);
  ig.neighbors_.assign(static_cast<std::size_t>(m), {});
  for (const auto& [e1, e2] : independent_edge_pairs(g)) {
    const int k = static_cast<int>(ig.edges_.size());
    ig.edges_.emplace_back(e1.id, e2.id);
    ig.index_[static_cast<std::size_t>(e1.id) * m + e2.id] = k;
    ig.index_[static_cast<std::size_t>(e2.id) * m + e1.id] = k;
    ig.neighbors_[e1.id].push_back(e2.id);
    ig.neighbors_[e2.id].push_back(e1.id);
  }
  for (auto& nb : ig.neighbors_) std::sort(nb.begin(), nb.end());

  // Gamma: (a, b) ~ (a, b') and (b, a) ~ (b', a) whenever b, b' are non-adjacent neighbors of a.
  DisjointSets sets(ig.arc_count());
  for (int a = 0; a < m; ++a) {
    const auto& nb = ig.neighbors_[a];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (ig.adjacent(nb[i], nb[j])) continue;
        sets.unite(ig.arc_id(a, nb[i]), ig.arc_id(a, nb[j]));
        sets.unite(ig.arc_id(nb[i], a), ig.arc_id(nb[j], a));
      }
    }
  }

  // Number classes by smallest (from, to) member.
  std::vector<std::size_t> arcs_by_pair(ig.arc_count());
  std::iota(arcs_by_pair.begin(), arcs_by_pair.end(), 0);
  std::sort(arcs_by_pair.begin(), arcs_by_pair.end(),
            [&](std::size_t x, std::size_t y) { return ig.arc(x) < ig.arc(y); });
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of_root(ig.arc_count(), kUnset);
  ig.arc_class_.assign(ig.arc_count(), kUnset);
  for (std::size_t a : arcs_by_pair) {
    const std::size_t root = sets.find(a);
    if (class_of_root[root] == kUnset) {
      class_of_root[root] = ig.classes_.size();
      ig.classes_.emplace_back();
    }
    ig.arc_class_[a] = class_of_root[root];
    ig.classes_[class_of_root[root]].push_back(ig.arc(a));
  }

  ig.reversal_.resize(ig.classes_.size());
  for (std::size_t c = 0; c < ig.classes_.size(); ++c) {
    const auto& [from, to] = ig.classes_[c].front();
    ig.reversal_[c] = ig.class_of(to, from);
    if (ig.reversal_[c] == c) ig.classes_separate_ = false;
  }
  if (ig.classes_separate_) {
    for (std::size_t c = 0; c < ig.classes_.size(); ++c) {
      if (c < ig.reversal_[c]) ig.class_pairs_.emplace_back(c, ig.reversal_[c]);
    }
  }
  return ig;
}

// ---------------------------------------------------------------------------

bool Orientation::points(const IndependenceGraph& ig, int a, int b) const {
  const int k = ig.edge_index(a, b);
  if (k < 0) return false;
  return forward(static_cast<std::size_t>(k)) == (a < b);
}

std::vector<IndependenceGraph::Arc> Orientation::arcs(const IndependenceGraph& ig) const {
  std::vector<IndependenceGraph::Arc> out;
  out.reserve(forward_.size());
  for (std::size_t k = 0; k < forward_.size(); ++k) {
    const auto& [lo, hi] = ig.edges()[k];
    out.push_back(forward(k) ? IndependenceGraph::Arc{lo, hi} : IndependenceGraph::Arc{hi, lo});
  }
  return out;
}

Orientation Orientation::reversed() const {
  std::vector<char> flipped(forward_.size());
  for (std::size_t k = 0; k < forward_.size(); ++k) flipped[k] = forward_[k] ? 0 : 1;
  return Orientation(std::move(flipped));
}

bool is_transitive(const IndependenceGraph& ig, const Orientation& f) {
  if (f.size() != ig.edge_count()) return false;
  for (int b = 0; b < ig.vertex_count(); ++b) {
    for (int a : ig.neighbors(b)) {
      if (!f.points(ig, a, b)) continue;
      for (int c : ig.neighbors(b)) {
        if (c == a || !f.points(ig, b, c)) continue;
        if (!f.points(ig, a, c)) return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> class_choices(const IndependenceGraph& ig, const Orientation& f) {
  std::vector<std::size_t> out;
  for (const auto& [cls, rev] : ig.class_pairs()) {
    std::size_t inside = 0;
    for (const auto& [from, to] : ig.members(cls)) {
      if (f.points(ig, from, to)) ++inside;
    }
    if (inside == ig.members(cls).size()) {
      out.push_back(cls);
    } else if (inside == 0) {
      out.push_back(rev);
    } else {
      return std::nullopt;
    }
  }
  return out;
}

Orientation transitive_orientation(const IndependenceGraph& ig) {
  const std::size_t n_edges = ig.edge_count();
  std::vector<char> alive(n_edges, 1);
  std::vector<char> forward(n_edges, 0);
  auto live = [&](int a, int b) {
    const int k = ig.edge_index(a, b);
    return k >= 0 && alive[static_cast<std::size_t>(k)];
  };

  std::size_t next = 0;
  std::vector<char> in_class(ig.arc_count(), 0);
  std::vector<std::size_t> cls;
  std::vector<std::size_t> frontier;
  while (true) {
    while (next < n_edges && !alive[next]) ++next;
    if (next == n_edges) break;

    // Implication class of lo -> hi in the residual graph.
    cls.clear();
    frontier.assign(1, 2 * next);
    in_class[2 * next] = 1;
    while (!frontier.empty()) {
      const std::size_t id = frontier.back();
      frontier.pop_back();
      cls.push_back(id);
      const auto [a, b] = ig.arc(id);
      auto reach = [&](int from, int to) {
        const std::size_t nid = ig.arc_id(from, to);
        if (!in_class[nid]) {
          in_class[nid] = 1;
          frontier.push_back(nid);
        }
      };
      for (int b2 : ig.neighbors(a)) {
        if (b2 != b && live(a, b2) && !live(b, b2)) reach(a, b2);
      }
      for (int a2 : ig.neighbors(b)) {
        if (a2 != a && live(a2, b) && !live(a, a2)) reach(a2, b);
      }
    }
    for (std::size_t id : cls) {
      if (in_class[id ^ 1]) {
        for (std::size_t x : cls) in_class[x] = 0;
        throw NotComparability("independence graph has an implication class equal to its reversal");
      }
    }
    for (std::size_t id : cls) {
      forward[id / 2] = (id % 2 == 0) ? 1 : 0;
      alive[id / 2] = 0;
      in_class[id] = 0;
    }
  }

  Orientation f(forward);
  if (!is_transitive(ig, f)) throw NotComparability("canonical orientation is not transitive");
  auto chosen = class_choices(ig, f);
  if (!chosen) throw NotComparability("canonical orientation splits an implication class");
  return Orientation(std::move(forward), std::move(*chosen));
}

std::vector<Orientation> enumerate_transitive_orientations(const IndependenceGraph& ig) {
  std::vector<Orientation> out;
  if (!ig.classes_separate()) return out;
  const auto& pairs = ig.class_pairs();
  if (pairs.size() > kClassPairGuard) {
    throw GuardError("enumerate_transitive_orientations: " + std::to_string(pairs.size()) +
                     " implication-class pairs exceed the guard of " + std::to_string(kClassPairGuard));
  }
  const std::size_t k = pairs.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<char> forward(ig.edge_count(), 0);
    std::vector<std::size_t> chosen(k);
    for (std::size_t i = 0; i < k; ++i) {
      chosen[i] = (mask >> i) & 1 ? pairs[i].second : pairs[i].first;
      for (const auto& [from, to] : ig.members(chosen[i])) {
        forward[static_cast<std::size_t>(ig.edge_index(from, to))] = from < to ? 1 : 0;
      }
    }
    Orientation f(std::move(forward), std::move(chosen));
    if (is_transitive(ig, f)) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassComponentMatch match_classes_to_components(const BipartiteGraph& g, const IndependenceGraph& ig,
                                                const AuxGraph& aux) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  ClassComponentMatch match{std::vector<std::size_t>(ig.class_count(), kUnset)};
  for (std::size_t c = 0; c < ig.class_count(); ++c) {
    for (const auto& [from, to] : ig.members(c)) {
      const EdgeRef& e1 = g.edge(from);
      const EdgeRef& e2 = g.edge(to);
      auto p = aux.find({{Side::U, e1.u}, {Side::V, e2.v}});
      if (!p) throw ConsistencyError("match_classes_to_components: (u1, v2) is not a G+ vertex");
      const std::size_t comp = aux.component_of(*p);
      if (match.component_of_class[c] == kUnset) {
        match.component_of_class[c] = comp;
      } else if (match.component_of_class[c] != comp) {
        throw ConsistencyError("match_classes_to_components: class " + std::to_string(c) +
                               " spans several G+ components");
      }
    }
  }
  std::vector<std::size_t> image = match.component_of_class;
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
    throw ConsistencyError("match_classes_to_components: two classes share a component");
  }
  if (image != aux.nontrivial_components()) {
    throw ConsistencyError("match_classes_to_components: image is not the set of non-trivial components");
  }
  for (std::size_t c = 0; c < ig.class_count(); ++c) {
    if (match.component_of_class[ig.reversal(c)] != aux.reversed_component(match.component_of_class[c])) {
      throw ConsistencyError("match_classes_to_components: reversal is not respected");
    }
  }
  return match;
}

ClassComponentMatch match_classes_to_components(const BipartiteGraph& g) {
  return match_classes_to_components(g, build_independence_graph(g), build_g_plus(g));
}

}  // namespace tdorg
