#include "tdorg/classify.hpp"

#include <type_traits>

#include "tdorg/errors.hpp"
#include "tdorg/independence.hpp"
#include "tdorg/oracle.hpp"

namespace tdorg {

Recognition recognize(const BipartiteGraph& g) {
  Recognition r;
  const bool bipartite = g_star_is_bipartite(g);
  if (cross_pair_count(g) > kAuxPairGuard) {
    r.is_2dorg = bipartite;
    r.g_star_only = true;
    return r;
  }
  r.witness = find_invertible_pair(g);
  r.is_2dorg = !r.witness;
  if (r.is_2dorg != bipartite) {
    throw ConsistencyError(std::string("recognize: G+ and G* disagree (G* ") +
                           (bipartite ? "bipartite" : "not bipartite") + ")");
  }
  return r;
}

bool is_2dorg(const BipartiteGraph& g) { return recognize(g).is_2dorg; }

namespace {

void require_twin_free_2dorg(const BipartiteGraph& g, const char* what) {
  if (auto twins = find_twins(g); !twins.empty()) {
    throw PreconditionError(std::string(what) + ": twins " + token(twins.front().first) + " and " +
                            token(twins.front().second));
  }
  if (auto r = recognize(g); !r) {
    throw PreconditionError(std::string(what) + ": not a 2DORG" +
                            (r.witness ? ": invertible pair " + token(*r.witness) : std::string()));
  }
}

// With two or more non-trivial components: exactly two, each a chain graph. With at most one
// (isolated vertices only add trivial components) the G+ rule applies as in the connected case.
bool unique_by_rule(const BipartiteGraph& g, const std::vector<Component>& comps) {
  std::size_t nontrivial = 0;
  for (const auto& c : comps) nontrivial += c.nontrivial ? 1 : 0;
  if (nontrivial <= 1) return build_g_plus(g).nontrivial_count() == 2;
  bool all_chain = true;
  for (const auto& c : comps) {
    if (!c.nontrivial) continue;
    std::vector<int> ids;
    for (const auto& v : c.vertices) ids.push_back(g.id(v));
    all_chain = all_chain && is_chain_graph(induced_subgraph(g, ids));
  }
  const bool unique = nontrivial == 2 && all_chain;
  if (unique != (build_g_plus(g).nontrivial_count() == 2)) {
    throw ConsistencyError("is_uniquely_representable: component rule disagrees with G+");
  }
  return unique;
}

}  // namespace

bool is_uniquely_representable(const BipartiteGraph& g) {
  require_twin_free_2dorg(g, "is_uniquely_representable");
  return unique_by_rule(g, connectivity(g));
}

std::size_t count_normalized_representations(const BipartiteGraph& g) {
  require_twin_free_2dorg(g, "count_normalized_representations");
  const std::size_t count = enumerate_transitive_orientations(build_independence_graph(g)).size();
  if (g.vertex_count() <= kNaiveOracleGuard) {
    const std::size_t brute = brute_force_normalized_representations(g, OracleRoute::Naive).size();
    if (brute != count) {
      throw ConsistencyError("count_normalized_representations: " + std::to_string(count) +
                             " orientations but " + std::to_string(brute) + " representations");
    }
  }
  return count;
}

ClassificationReport classify(const BipartiteGraph& g) {
  ClassificationReport r;
  r.recognition = recognize(g);
  const auto comps = connectivity(g);
  r.connected = comps.size() <= 1;
  r.twin_free = find_twins(g).empty();
  r.chain_graph = is_chain_graph(g);
  for (const auto& c : comps) r.nontrivial_g_components += c.nontrivial ? 1 : 0;
  if (cross_pair_count(g) <= kAuxPairGuard) r.nontrivial_gplus_components = build_g_plus(g).nontrivial_count();
  if (!r.recognition || !r.twin_free) return r;

  r.uniquely_representable = unique_by_rule(g, comps);
  try {
    r.normalized_representation_count = count_normalized_representations(g);
  } catch (const GuardError&) {
  }
  if (r.connected && r.nontrivial_gplus_components) {
    if (auto ex = find_buried_subgraph(g)) r.buried_subgraph = ex->subgraph.vertices;
  }

  if (r.normalized_representation_count &&
      (*r.normalized_representation_count == 2) != *r.uniquely_representable) {
    throw ConsistencyError("classify: uniqueness disagrees with the representation count");
  }
  if (r.connected && !r.chain_graph && r.nontrivial_gplus_components &&
      r.buried_subgraph.has_value() == *r.uniquely_representable) {
    throw ConsistencyError("classify: uniqueness disagrees with buried-subgraph existence");
  }
  return r;
}

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

template <class T>
std::string or_none(const std::optional<T>& v) {
  if (!v) return "none";
  if constexpr (std::is_same_v<T, bool>) {
    return yes_no(*v);
  } else {
    return std::to_string(*v);
  }
}

}  // namespace

std::string format_report(const ClassificationReport& r) {
  std::string out;
  auto line = [&](const char* key, const std::string& value) { out += std::string(key) + ": " + value + "\n"; };
  line("is_2dorg", yes_no(r.recognition.is_2dorg));
  line("witness", r.recognition.witness ? token(*r.recognition.witness) : "none");
  line("connected", yes_no(r.connected));
  line("twin_free", yes_no(r.twin_free));
  line("chain_graph", yes_no(r.chain_graph));
  line("nontrivial_g_components", std::to_string(r.nontrivial_g_components));
  line("nontrivial_gplus_components", or_none(r.nontrivial_gplus_components));
  line("uniquely_representable", or_none(r.uniquely_representable));
  line("normalized_representation_count", or_none(r.normalized_representation_count));
  line("buried_subgraph", r.buried_subgraph ? format_vertex_set(*r.buried_subgraph) : "none");
  return out;
}

}  // namespace tdorg
