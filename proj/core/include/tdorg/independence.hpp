#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tdorg/aux_graphs.hpp"
#include "tdorg/graph.hpp"

namespace tdorg {

/// I(G): one vertex per edge of G (by edge id), adjacency = independence.
///
/// Every I-edge {lo, hi} (lo < hi) has two arcs: 2k = lo->hi and 2k+1 = hi->lo.
/// Arcs are partitioned into implication classes (closure of the Gamma relation),
/// numbered by their smallest (from, to) member.
class IndependenceGraph {
 public:
  using Arc = std::pair<int, int>;

  int vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// I-edges as (lo, hi), sorted.
  const std::vector<Arc>& edges() const noexcept { return edges_; }
  const std::vector<int>& neighbors(int e) const { return neighbors_[static_cast<std::size_t>(e)]; }
  bool adjacent(int a, int b) const { return edge_index(a, b) >= 0; }
  /// Index into edges() of {a, b}, or -1.
  int edge_index(int a, int b) const {
    return index_[static_cast<std::size_t>(a) * static_cast<std::size_t>(vertex_count_) +
                  static_cast<std::size_t>(b)];
  }

  std::size_t arc_count() const noexcept { return 2 * edges_.size(); }
  Arc arc(std::size_t id) const;
  std::size_t arc_id(int from, int to) const;

  std::size_t class_count() const noexcept { return classes_.size(); }
  std::size_t class_of(int from, int to) const { return arc_class_[arc_id(from, to)]; }
  /// Members sorted by (from, to).
  const std::vector<Arc>& members(std::size_t cls) const { return classes_[cls]; }
  std::size_t reversal(std::size_t cls) const { return reversal_[cls]; }
  /// Pairs {A, A^-1} with A < A^-1, ordered by A. Empty if some class is its own reversal.
  const std::vector<std::pair<std::size_t, std::size_t>>& class_pairs() const noexcept { return class_pairs_; }
  /// False if some implication class equals its reversal (then I(G) is not a comparability graph).
  bool classes_separate() const noexcept { return classes_separate_; }

 private:
  friend IndependenceGraph build_independence_graph(const BipartiteGraph& g);

  int vertex_count_ = 0;
  std::vector<Arc> edges_;
  std::vector<int> index_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::size_t> arc_class_;
  std::vector<std::vector<Arc>> classes_;
  std::vector<std::size_t> reversal_;
  std::vector<std::pair<std::size_t, std::size_t>> class_pairs_;
  bool classes_separate_ = true;
};

IndependenceGraph build_independence_graph(const BipartiteGraph& g);

/// A direction for every I-edge, plus the class chosen from each class pair.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::vector<char> forward, std::vector<std::size_t> chosen = {})
      : forward_(std::move(forward)), chosen_(std::move(chosen)) {}

  std::size_t size() const noexcept { return forward_.size(); }
  /// Edge k of I(G) runs lo -> hi.
  bool forward(std::size_t edge) const { return forward_[edge] != 0; }
  /// a -> b in this orientation; requires a ~ b in I(G).
  bool points(const IndependenceGraph& ig, int a, int b) const;
  std::vector<IndependenceGraph::Arc> arcs(const IndependenceGraph& ig) const;
  /// For each entry of class_pairs(), the class this orientation contains.
  const std::vector<std::size_t>& chosen_classes() const noexcept { return chosen_; }

  Orientation reversed() const;

  friend bool operator==(const Orientation& a, const Orientation& b) { return a.forward_ == b.forward_; }
  friend auto operator<=>(const Orientation& a, const Orientation& b) { return a.forward_ <=> b.forward_; }

 private:
  std::vector<char> forward_;
  std::vector<std::size_t> chosen_;
};

/// Exhaustive check: a -> b -> c implies a ~ c and a -> c.
bool is_transitive(const IndependenceGraph& ig, const Orientation& f);

/// The class taken from each class pair, or nullopt if some pair is mixed.
std::optional<std::vector<std::size_t>> class_choices(const IndependenceGraph& ig, const Orientation& f);

/// Canonical transitive orientation: repeatedly orient the smallest remaining I-edge lo -> hi and
/// absorb its implication class in the residual graph. Throws NotComparability on failure.
Orientation transitive_orientation(const IndependenceGraph& ig);

constexpr std::size_t kClassPairGuard = 20;

/// Every transitive orientation, in increasing order of forward-bit vector. Each is a choice of one
/// class per class pair; choices are filtered by the transitivity check. Throws GuardError when there
/// are more than 20 class pairs.
std::vector<Orientation> enumerate_transitive_orientations(const IndependenceGraph& ig);

/// Maps the implication class holding (u1v1, u2v2) to the G+ component holding (u1, v2).
struct ClassComponentMatch {
  std::vector<std::size_t> component_of_class;
};

/// Verifies the map is well defined, a bijection onto the non-trivial components, and commutes with
/// reversal. Throws ConsistencyError otherwise.
ClassComponentMatch match_classes_to_components(const BipartiteGraph& g, const IndependenceGraph& ig,
                                                const AuxGraph& aux);
ClassComponentMatch match_classes_to_components(const BipartiteGraph& g);

}  // namespace tdorg
