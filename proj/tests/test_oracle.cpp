#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "tdorg/errors.hpp"
#include "tdorg/generators.hpp"
#include "tdorg/independence.hpp"
#include "tdorg/oracle.hpp"

using namespace tdorg;

TEST_CASE("oracle on G_E") {
  const auto g = fixtures::g_e();
  const auto reps = brute_force_normalized_representations(g, OracleRoute::Naive);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0] == reverse_representation(reps[1]));
  const auto r1 = fixtures::rep(g, fixtures::kR1x, fixtures::kR1y);
  CHECK(std::find(reps.begin(), reps.end(), r1) != reps.end());
  CHECK(brute_force_normalized_representations(g, OracleRoute::Pruned) == reps);
  CHECK_FALSE(oracle_accepts(g, fixtures::rep(g, fixtures::kR2x, fixtures::kR2y)));
  CHECK(oracle_accepts(g, r1));
}

TEST_CASE("oracle on P4 and G_S") {
  CHECK(brute_force_normalized_representations(fixtures::p4()).size() == 1);
  const auto gs = fixtures::g_s();
  const auto reps = brute_force_normalized_representations(gs, OracleRoute::Pruned);
  CHECK(reps.size() == 4);
  for (const auto& [x, y] : {std::pair{fixtures::kSTopX, fixtures::kSTopY},
                             std::pair{fixtures::kSBottomX, fixtures::kSBottomY}}) {
    CHECK(std::binary_search(reps.begin(), reps.end(), fixtures::rep(gs, x, y)));
  }
}

TEST_CASE("oracle guards") {
  CHECK_THROWS_AS(brute_force_normalized_representations(BipartiteGraph(5, 4, {}), OracleRoute::Naive), GuardError);
  CHECK_THROWS_AS(brute_force_normalized_representations(BipartiteGraph(8, 7, {})), GuardError);
}

TEST_CASE("pruned route matches the naive route up to 8 vertices") {
  for (std::uint64_t s = 0; s < 120; ++s) {
    const int nu = 1 + static_cast<int>(s % 4);
    const int nv = 1 + static_cast<int>((s / 4) % 4);
    const auto g = s % 3 == 0 ? random_bipartite(nu, nv, 0.5, s) : random_2dorg(nu, nv, s).graph;
    CHECK(brute_force_normalized_representations(g, OracleRoute::Naive) ==
          brute_force_normalized_representations(g, OracleRoute::Pruned));
  }
  // twins and isolated vertices included on purpose
  const auto star = fixtures::make(1, 2, {{1, 1}, {1, 2}});
  CHECK(brute_force_normalized_representations(star, OracleRoute::Naive) ==
        brute_force_normalized_representations(star, OracleRoute::Pruned));
  const auto iso = fixtures::make(2, 2, {{1, 1}});
  CHECK(brute_force_normalized_representations(iso, OracleRoute::Naive) ==
        brute_force_normalized_representations(iso, OracleRoute::Pruned));
}

TEST_CASE("oracle count equals the number of transitive orientations") {
  for (const auto& [g, seed] : corpus::random_2dorgs(150, 6, 6, 9, false, 12)) {
    const auto reps = brute_force_normalized_representations(g);
    CHECK(reps.size() == enumerate_transitive_orientations(build_independence_graph(g)).size());
    for (const auto& r : reps) {
      CHECK(std::binary_search(reps.begin(), reps.end(), reverse_representation(r)));
    }
  }
}

TEST_CASE("non-2DORGs have no normalized representation") {
  CHECK(brute_force_normalized_representations(fixtures::c6()).empty());
}

TEST_CASE("verify_theorems") {
  for (const auto& g : {fixtures::g_e(), fixtures::g_s(), fixtures::p4(), fixtures::g_2k2(), fixtures::c6()}) {
    const auto report = verify_theorems(g);
    for (const auto& v : report.verdicts) {
      INFO(v.name << ": " << v.counterexample);
      CHECK(v.passed);
    }
    CHECK(report.all_passed);
  }
  const auto gs = verify_theorems(fixtures::g_s());
  CHECK(gs.count == 4);
  REQUIRE(gs.buried_subgraphs.has_value());
  CHECK(gs.buried_subgraphs->size() >= 2);
  const auto text = format_oracle_report(gs);
  CHECK(text.find("representations: 4\n") == 0);
  CHECK(text.find("verdict main-theorem: PASS\n") != std::string::npos);
  CHECK(text.find("all_passed: true\n") != std::string::npos);
}

TEST_CASE("verify_theorems on a random sweep") {
  std::size_t failures = 0;
  for (const auto& [g, seed] : corpus::random_2dorgs(1000, 5, 5, 1, false)) {
    const auto report = verify_theorems(g);
    if (!report.all_passed) {
      ++failures;
      for (const auto& v : report.verdicts) {
        if (!v.passed) MESSAGE("seed " << seed << " " << v.name << ": " << v.counterexample);
      }
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("verify_theorems on connected components of larger draws") {
  std::size_t failures = 0;
  for (const auto& [g, seed] : corpus::component_2dorgs(300, 9, 500, 11, false)) {
    const auto report = verify_theorems(g);
    if (report.all_passed) continue;
    ++failures;
    for (const auto& v : report.verdicts) {
      if (!v.passed) MESSAGE("seed " << seed << " " << v.name << ": " << v.counterexample);
    }
  }
  CHECK(failures == 0);
}
