#include <algorithm>
#include <functional>

#include "tdorg/aux_graphs.hpp"
#include "tdorg/classify.hpp"
#include "tdorg/errors.hpp"
#include "tdorg/independence.hpp"
#include "tdorg/oracle.hpp"

namespace tdorg {

namespace {

std::string rep_token(const Representation& rep) {
  std::string out = "x:";
  for (const auto& v : rep.order_x) out += " " + token(v);
  out += " / y:";
  for (const auto& v : rep.order_y) out += " " + token(v);
  return out;
}

// A check returns an empty string on success and a counterexample otherwise.
using Check = std::function<std::string()>;

Verdict run(std::string name, bool applicable, const Check& check) {
  Verdict v{std::move(name), applicable, true, {}};
  if (!applicable) return v;
  try {
    v.counterexample = check();
  } catch (const GuardError&) {
    v.applicable = false;
    return v;
  } catch (const std::exception& e) {
    v.counterexample = std::string("exception: ") + e.what();
  }
  v.passed = v.counterexample.empty();
  return v;
}

std::string flag(bool b) { return b ? "true" : "false"; }

}  // namespace

OracleReport verify_theorems(const BipartiteGraph& g) {
  OracleReport report;
  report.representations = brute_force_normalized_representations(g);
  report.count = report.representations.size();
  if (g.vertex_count() <= kBuriedEnumerationGuard) report.buried_subgraphs = enumerate_buried_subgraphs(g);

  const auto& reps = report.representations;
  const std::size_t count = report.count;
  const bool twin_free = find_twins(g).empty();
  const Recognition rec = recognize(g);
  const bool connected = is_connected(g);
  const bool chain = is_chain_graph(g);
  std::size_t nontrivial_parts = 0;
  for (const auto& c : connectivity(g)) nontrivial_parts += c.nontrivial ? 1 : 0;
  const bool good = twin_free && rec.is_2dorg;
  const bool have_buried = report.buried_subgraphs.has_value();
  auto contains = [&](const Representation& r) { return std::binary_search(reps.begin(), reps.end(), r); };

  auto& out = report.verdicts;
  out.push_back(run("recognition", twin_free, [&]() -> std::string {
    if (rec.is_2dorg == (count > 0)) return {};
    return "recognized " + flag(rec.is_2dorg) + " but " + std::to_string(count) + " normalized representations";
  }));
  out.push_back(run("orientation-count", good, [&]() -> std::string {
    const std::size_t k = enumerate_transitive_orientations(build_independence_graph(g)).size();
    if (k == count) return {};
    return std::to_string(k) + " transitive orientations vs " + std::to_string(count) + " representations";
  }));
  out.push_back(run("class-components", good, [&]() -> std::string {
    const auto ig = build_independence_graph(g);
    const auto aux = build_g_plus(g);
    match_classes_to_components(g, ig, aux);
    if (ig.class_count() == aux.nontrivial_count()) return {};
    return std::to_string(ig.class_count()) + " implication classes vs " + std::to_string(aux.nontrivial_count()) +
           " non-trivial components";
  }));
  out.push_back(run("reversal-closure", true, [&]() -> std::string {
    for (const auto& r : reps) {
      if (!contains(reverse_representation(r))) return "reverse missing for " + rep_token(r);
    }
    return {};
  }));
  out.push_back(run("interleaving", count > 0, [&]() -> std::string {
    for (const auto& r : reps) {
      if (auto bad = interleaving_violation(g, r)) {
        return token(bad->first) + ", " + token(bad->second) + " in " + rep_token(r);
      }
    }
    return {};
  }));
  out.push_back(run("construction", good, [&]() -> std::string {
    const auto r = construct_normalized_representation(g);
    return contains(r) ? std::string() : "constructed " + rep_token(r) + " not found by the oracle";
  }));
  out.push_back(run("main-theorem", good && connected && !chain && have_buried, [&]() -> std::string {
    const bool two = build_g_plus(g).nontrivial_count() == 2;
    const bool none_buried = report.buried_subgraphs->empty();
    const bool count_two = count == 2;
    if (two == none_buried && none_buried == count_two) return {};
    return "two components " + flag(two) + ", no buried subgraph " + flag(none_buried) + ", count " +
           std::to_string(count);
  }));
  out.push_back(run("chain-graph", good && connected, [&]() -> std::string {
    if ((count == 1) == chain) return {};
    return "chain graph " + flag(chain) + " with count " + std::to_string(count);
  }));
  out.push_back(run("disconnected", good && nontrivial_parts >= 2, [&]() -> std::string {
    const bool unique = is_uniquely_representable(g);
    if (unique == (count == 2)) return {};
    return "component rule gives " + flag(unique) + " with count " + std::to_string(count);
  }));
  out.push_back(run("uniqueness-count", good, [&]() -> std::string {
    const bool unique = is_uniquely_representable(g);
    if (unique == (count == 2)) return {};
    return "uniquely representable " + flag(unique) + " with count " + std::to_string(count);
  }));
  out.push_back(run("buried-extraction", good && connected && have_buried, [&]() -> std::string {
    const auto ex = find_buried_subgraph(g);
    const bool many = build_g_plus(g).nontrivial_count() > 2;
    if (ex.has_value() != many) return "extraction " + flag(ex.has_value()) + " with more than two components " + flag(many);
    if (!ex) return {};
    const auto& all = *report.buried_subgraphs;
    if (!std::binary_search(all.begin(), all.end(), ex->subgraph.vertices)) {
      return "extracted " + format_vertex_set(ex->subgraph.vertices) + " not in the enumeration";
    }
    return {};
  }));
  out.push_back(run("k-set-biclique", rec.is_2dorg && have_buried, [&]() -> std::string {
    for (const auto& b : *report.buried_subgraphs) k_sets(g, b);
    return {};
  }));

  report.all_passed = std::all_of(out.begin(), out.end(), [](const Verdict& v) { return v.passed; });
  return report;
}

std::string format_oracle_report(const OracleReport& r) {
  std::string out = "representations: " + std::to_string(r.count) + "\n";
  for (const auto& rep : r.representations) out += format_representation(rep);
  if (r.buried_subgraphs) {
    out += "buried_subgraphs: " + std::to_string(r.buried_subgraphs->size()) + "\n";
    for (const auto& b : *r.buried_subgraphs) out += "B: " + format_vertex_set(b) + "\n";
  } else {
    out += "buried_subgraphs: skipped\n";
  }
  for (const auto& v : r.verdicts) {
    out += "verdict " + v.name + ": ";
    if (!v.applicable) {
      out += "n/a\n";
    } else if (v.passed) {
      out += "PASS\n";
    } else {
      out += "FAIL " + v.counterexample + "\n";
    }
  }
  out += std::string("all_passed: ") + (r.all_passed ? "true" : "false") + "\n";
  return out;
}

}  // namespace tdorg
