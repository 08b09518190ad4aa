#include <doctest.h>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "tdorg/classify.hpp"
#include "tdorg/errors.hpp"
#include "tdorg/generators.hpp"

using namespace tdorg;

TEST_CASE("recognition on the fixtures") {
  CHECK(is_2dorg(fixtures::g_e()));
  CHECK(is_2dorg(fixtures::g_s()));
  const auto c6 = recognize(fixtures::c6());
  CHECK_FALSE(c6.is_2dorg);
  CHECK(c6.witness.has_value());
  CHECK_FALSE(c6.g_star_only);
}

TEST_CASE("unique representability") {
  CHECK(is_uniquely_representable(fixtures::g_e()));
  CHECK_FALSE(is_uniquely_representable(fixtures::g_s()));
  CHECK_FALSE(is_uniquely_representable(fixtures::p4()));
  CHECK(is_uniquely_representable(fixtures::g_2k2()));
  CHECK_FALSE(is_uniquely_representable(fixtures::make(3, 3, {{1, 1}, {2, 2}, {3, 3}})));
  CHECK_THROWS_AS(is_uniquely_representable(fixtures::c6()), PreconditionError);
  CHECK_THROWS_AS(is_uniquely_representable(fixtures::make(1, 2, {{1, 1}, {1, 2}})), PreconditionError);
}

TEST_CASE("representation counts") {
  CHECK(count_normalized_representations(fixtures::g_e()) == 2);
  CHECK(count_normalized_representations(fixtures::g_s()) == 4);
  CHECK(count_normalized_representations(fixtures::p4()) == 1);
  CHECK(count_normalized_representations(fixtures::g_2k2()) == 2);
  CHECK_THROWS_AS(count_normalized_representations(fixtures::c6()), PreconditionError);
}

TEST_CASE("classification invariants on random connected 2DORGs") {
  for (const auto& [g, seed] : corpus::random_2dorgs(400, 6, 6, 101, true)) {
    const auto r = classify(g);
    REQUIRE(r.normalized_representation_count.has_value());
    const std::size_t count = *r.normalized_representation_count;
    CHECK(*r.uniquely_representable == (count == 2));
    CHECK((count == 1) == r.chain_graph);
    if (!r.chain_graph) {
      CHECK(count % 2 == 0);
      CHECK(r.buried_subgraph.has_value() == !*r.uniquely_representable);
    }
  }
}

TEST_CASE("classification report text") {
  const auto r = classify(fixtures::g_s());
  CHECK(format_report(r) ==
        "is_2dorg: true\n"
        "witness: none\n"
        "connected: true\n"
        "twin_free: true\n"
        "chain_graph: false\n"
        "nontrivial_g_components: 1\n"
        "nontrivial_gplus_components: 4\n"
        "uniquely_representable: false\n"
        "normalized_representation_count: 4\n"
        "buried_subgraph: u1 u2 u3 v1 v2 v3\n");
  const auto bad = classify(fixtures::c6());
  CHECK_FALSE(bad.recognition.is_2dorg);
  CHECK_FALSE(bad.uniquely_representable.has_value());
}
