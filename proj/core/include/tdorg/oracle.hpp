#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tdorg/buried.hpp"
#include "tdorg/graph.hpp"
#include "tdorg/representation.hpp"

namespace tdorg {

constexpr int kNaiveOracleGuard = 8;
constexpr int kPrunedOracleGuard = 14;

enum class OracleRoute {
  Naive,   // every pair of permutations
  Pruned,  // backtracking over <_x with <_y read off pairwise
  Auto,    // naive up to 8 vertices, pruned above
};

/// Every (order_x, order_y) that realizes g and is normalized, sorted and duplicate-free.
/// Evaluated from the definitions using graph-core queries only. Throws GuardError when the
/// vertex count exceeds the route's guard.
std::vector<Representation> brute_force_normalized_representations(const BipartiteGraph& g,
                                                                   OracleRoute route = OracleRoute::Auto);

/// Definitional check shared by both routes.
bool oracle_accepts(const BipartiteGraph& g, const Representation& rep);

struct Verdict {
  std::string name;
  bool applicable = false;
  bool passed = true;
  std::string counterexample;  // empty when passed or not applicable
};

struct OracleReport {
  std::vector<Representation> representations;
  std::size_t count = 0;
  std::optional<std::vector<VertexSet>> buried_subgraphs;  // within the enumeration guard
  std::vector<Verdict> verdicts;
  bool all_passed = true;
};

/// Compares every constructive predicate against the brute-force listings. Failures are reported
/// as verdicts, never thrown; guard violations from the oracle itself propagate as GuardError.
OracleReport verify_theorems(const BipartiteGraph& g);

std::string format_oracle_report(const OracleReport& r);

}  // namespace tdorg
