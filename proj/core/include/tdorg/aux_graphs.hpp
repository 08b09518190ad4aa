#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tdorg/graph.hpp"

namespace tdorg {

/// An ordered non-adjacent cross pair (a, b). Ordered by (side, index, side, index).
struct OrderedPair {
  VertexRef first;
  VertexRef second;

  friend auto operator<=>(const OrderedPair&, const OrderedPair&) = default;
};

OrderedPair reversed(const OrderedPair& p);
std::string token(const OrderedPair& p);  // (u1,v3)

/// Pairs above this count are not materialized as G+; recognition then uses the G* route only.
constexpr std::size_t kAuxPairGuard = 2'000'000;

/// Number of ordered non-adjacent cross pairs: 2 (|U||V| - |E|).
std::size_t cross_pair_count(const BipartiteGraph& g);

/// The auxiliary graph G+: vertices are ordered non-adjacent cross pairs (a, b), and
/// (a, b) ~ (c, d) iff ac and bd are both edges of G.
///
/// Pairs are stored in canonical order. Components are numbered by their smallest pair.
class AuxGraph {
 public:
  const std::vector<OrderedPair>& pairs() const noexcept { return pairs_; }
  std::size_t pair_count() const noexcept { return pairs_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::optional<std::size_t> find(const OrderedPair& p) const;
  std::size_t reverse_of(std::size_t pair) const { return reverse_[pair]; }
  const std::vector<std::size_t>& neighbors(std::size_t pair) const { return adjacency_[pair]; }

  std::size_t component_count() const noexcept { return members_.size(); }
  std::size_t component_of(std::size_t pair) const { return component_[pair]; }
  const std::vector<std::size_t>& members(std::size_t component) const { return members_[component]; }
  std::size_t reversed_component(std::size_t component) const { return reversed_component_[component]; }
  bool nontrivial(std::size_t component) const { return nontrivial_[component] != 0; }
  std::size_t nontrivial_count() const;
  /// Non-trivial component ids in canonical order.
  std::vector<std::size_t> nontrivial_components() const;

 private:
  friend AuxGraph build_g_plus(const BipartiteGraph& g);

  int u_count_ = 0;
  int v_count_ = 0;
  std::vector<OrderedPair> pairs_;
  std::vector<std::ptrdiff_t> uv_index_;  // (u, v) -> pair or -1
  std::vector<std::ptrdiff_t> vu_index_;  // (v, u) -> pair or -1
  std::vector<std::size_t> reverse_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t edge_count_ = 0;
  std::vector<std::size_t> component_;
  std::vector<std::vector<std::size_t>> members_;
  std::vector<std::size_t> reversed_component_;
  std::vector<char> nontrivial_;
};

/// Throws GuardError when cross_pair_count(g) exceeds kAuxPairGuard.
AuxGraph build_g_plus(const BipartiteGraph& g);

/// Smallest pair (a, b) whose reverse lies in the same G+ component.
std::optional<OrderedPair> find_invertible_pair(const AuxGraph& aux);
std::optional<OrderedPair> find_invertible_pair(const BipartiteGraph& g);
bool has_invertible_pair(const BipartiteGraph& g);

/// G* on the same pair set: (a, b) ~ (b, a), and (a, b) ~ (c, d) when ad and bc are edges.
/// Neighbors are generated on the fly; nothing beyond the pair index is materialized.
bool g_star_is_bipartite(const BipartiteGraph& g);

}  // namespace tdorg
