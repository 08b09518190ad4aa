#include <doctest.h>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "tdorg/classify.hpp"
#include "tdorg/errors.hpp"
#include "tdorg/generators.hpp"
#include "tdorg/graph.hpp"

using namespace tdorg;
using fixtures::u;
using fixtures::v;

TEST_CASE("parse G_E document") {
  const auto parsed = parse_graph("p tdorg 3 3 5\ne 1 1\ne 1 2\ne 1 3\ne 2 2\ne 3 3\n");
  CHECK(parsed.graph == fixtures::g_e());
  CHECK(parsed.duplicate_edges == 0);
}

TEST_CASE("parse edge cases") {
  const auto iso = parse_graph("p tdorg 1 0 0\n").graph;
  CHECK(iso.u_count() == 1);
  CHECK(iso.v_count() == 0);
  CHECK(iso.edge_count() == 0);

  CHECK(parse_graph("p tdorg 2 2 3\ne 1 1\ne 2 1\ne 2 2\n").graph == fixtures::p4());
  CHECK(parse_graph("c comment\r\np tdorg 2 2 3\r\n\r\ne 1 1\r\ne u2 v1\r\ne 2 2\r\n").graph == fixtures::p4());

  const auto dup = parse_graph("p tdorg 1 1 1\ne 1 1\ne 1 1\n");
  CHECK(dup.graph.edge_count() == 1);
  CHECK(dup.duplicate_edges == 1);

  const auto labelled = parse_graph("p tdorg 1 1 1\nn u1 alpha\ne 1 1\n").graph;
  CHECK(labelled.label(u(1)) == "alpha");
  CHECK(labelled.label(v(1)) == "v1");
}

TEST_CASE("parse errors name the line") {
  auto line_of = [](const char* text) -> long {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.line());
    }
    return -1;
  };
  CHECK(line_of("p tdorg x 3 0\n") == 1);
  CHECK(line_of("p tdorg 2 2 1\ne 3 1\n") == 2);
  CHECK(line_of("e 1 1\np tdorg 1 1 1\n") == 1);
  CHECK(line_of("p tdorg 2 2 1\ne u1 u2\n") == 2);
  CHECK(line_of("p tdorg 1 1 1\np tdorg 1 1 1\n") == 2);
  CHECK(line_of("p tdorg 2 2 2\ne 1 1\n") > 0);
  CHECK(line_of("q 1 2\n") == 1);
}

TEST_CASE("serialize round trip") {
  CHECK(serialize_graph(BipartiteGraph()) == "p tdorg 0 0 0\n");
  CHECK(serialize_graph(fixtures::g_e()) == "p tdorg 3 3 5\ne 1 1\ne 1 2\ne 1 3\ne 2 2\ne 3 3\n");
  CHECK(serialize_graph(fixtures::p4()) == "p tdorg 2 2 3\ne 1 1\ne 2 1\ne 2 2\n");
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto g = random_bipartite(1 + static_cast<int>(s % 6), 1 + static_cast<int>(s % 5), 0.4, s);
    CHECK(parse_graph(serialize_graph(g)).graph == g);
  }
  const auto labelled = parse_graph("p tdorg 1 1 1\nn v1 right side\ne 1 1\n").graph;
  CHECK(parse_graph(serialize_graph(labelled)).graph == labelled);
}

TEST_CASE("neighborhood relation") {
  const auto g = fixtures::g_e();
  CHECK(neighborhood_relation(g, u(2), u(1)) == Inclusion::ProperSubset);
  CHECK(neighborhood_relation(g, u(1), u(2)) == Inclusion::ProperSuperset);
  CHECK(neighborhood_relation(g, v(1), v(3)) == Inclusion::ProperSubset);
  CHECK(neighborhood_relation(g, u(3), u(3)) == Inclusion::Equal);
  CHECK(neighborhood_relation(g, u(2), u(3)) == Inclusion::Incomparable);
  CHECK_THROWS_AS(neighborhood_relation(g, u(1), v(1)), PreconditionError);
}

TEST_CASE("twins") {
  const auto star = fixtures::make(1, 2, {{1, 1}, {1, 2}});
  const auto twins = find_twins(star);
  REQUIRE(twins.size() == 1);
  CHECK(twins[0] == TwinPair{v(1), v(2)});
  const auto collapsed = collapse_twins(star);
  CHECK(collapsed.graph == fixtures::make(1, 1, {{1, 1}}));
  CHECK(collapsed.mapping[star.id(v(2))] == v(1));
  CHECK(find_twins(fixtures::g_e()).empty());
  CHECK(find_twins(fixtures::g_s()).empty());

  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto g = random_bipartite(5, 5, 0.5, s);
    const auto once = collapse_twins(g).graph;
    CHECK(find_twins(once).empty());
    CHECK(collapse_twins(once).graph == once);
  }
}

TEST_CASE("independent edges") {
  const auto ge = fixtures::g_e();
  using fixtures::edge;
  CHECK(are_independent_edges(ge, edge(ge, 2, 2), edge(ge, 3, 3)));
  CHECK_FALSE(are_independent_edges(ge, edge(ge, 1, 1), edge(ge, 2, 2)));
  const auto gs = fixtures::g_s();
  CHECK(are_independent_edges(gs, edge(gs, 4, 4), edge(gs, 5, 5)));
  CHECK_THROWS_AS(are_independent_edges(ge, edge(ge, 1, 1), edge(ge, 1, 1)), PreconditionError);

  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto g = random_bipartite(4, 4, 0.5, s);
    for (const auto& a : g.edges()) {
      for (const auto& b : g.edges()) {
        if (a.id != b.id) CHECK(are_independent_edges(g, a, b) == are_independent_edges(g, b, a));
      }
    }
  }
}

TEST_CASE("chain graphs") {
  CHECK(is_chain_graph(fixtures::p4()));
  CHECK_FALSE(is_chain_graph(fixtures::g_e()));
  CHECK_FALSE(is_chain_graph(fixtures::g_s()));
  for (const auto& g : corpus::chain_graphs(5)) CHECK(is_chain_graph(g));
  // both internal tests run (and must agree) on every call
  for (std::uint64_t s = 0; s < 300; ++s) {
    const auto g = random_bipartite(4, 5, 0.6, s);
    CHECK(is_chain_graph(g) == independent_edge_pairs(g).empty());
  }
}

TEST_CASE("chordal bipartite") {
  CHECK_FALSE(is_chordal_bipartite(fixtures::c6()));
  CHECK(is_chordal_bipartite(fixtures::g_e()));
  CHECK(is_chordal_bipartite(fixtures::g_s()));
  CHECK_THROWS_AS(is_chordal_bipartite(BipartiteGraph(13, 12, {})), GuardError);
  const auto c8 = fixtures::make(4, 4, {{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 3}, {4, 4}, {1, 4}});
  CHECK_FALSE(is_chordal_bipartite(c8));
  // a chord through C8 leaves only 4- and 6-cycles; the 6-cycle is induced
  const auto c8_chord = fixtures::make(4, 4, {{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 3}, {4, 4}, {1, 4}, {1, 2}});
  CHECK_FALSE(is_chordal_bipartite(c8_chord));
}

TEST_CASE("2DORGs are chordal bipartite") {
  for (const auto& [g, seed] : corpus::random_2dorgs(300, 6, 6, 1, false)) {
    CHECK(is_chordal_bipartite(g));
  }
  for (std::uint64_t s = 0; s < 300; ++s) {
    const auto g = random_bipartite(5, 5, 0.5, s);
    if (is_2dorg(g)) CHECK(is_chordal_bipartite(g));
  }
}

TEST_CASE("connectivity") {
  const auto two = connectivity(fixtures::g_2k2());
  REQUIRE(two.size() == 2);
  CHECK(two[0].nontrivial);
  CHECK(two[1].nontrivial);
  CHECK(connectivity(fixtures::g_e()).size() == 1);
  CHECK(is_connected(fixtures::g_e()));
  const auto iso = connectivity(fixtures::make(2, 1, {{2, 1}}));
  REQUIRE(iso.size() == 2);
  CHECK_FALSE(iso[0].nontrivial);
  CHECK(iso[0].vertices == std::vector<VertexRef>{u(1)});
  CHECK(iso[1].nontrivial);
}

TEST_CASE("generators") {
  const auto empty = random_2dorg(0, 0, 7);
  CHECK(empty.graph.vertex_count() == 0);
  const auto small = random_2dorg(3, 3, 12345);
  CHECK(realizes(small.graph, small.representation));
  CHECK(random_2dorg(4, 4, 99).graph == random_2dorg(4, 4, 99).graph);
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const auto gen = random_2dorg(5, 5, s);
    CHECK(realizes(gen.graph, gen.representation));
    CHECK(is_2dorg(collapse_twins(gen.graph).graph));
  }
  CHECK(random_bipartite(3, 4, 0.0, 1).edge_count() == 0);
  const auto full = random_bipartite(3, 4, 1.0, 1);
  CHECK(full.edge_count() == 12);
  CHECK(is_chain_graph(collapse_twins(full).graph));
  CHECK_THROWS_AS(random_bipartite(2, 2, 1.5, 1), PreconditionError);
}

TEST_CASE("induced subgraph and union") {
  const auto gs = fixtures::g_s();
  const std::vector<int> keep{gs.id(u(4)), gs.id(u(5)), gs.id(v(4)), gs.id(v(5))};
  const auto sub = induced_subgraph(gs, keep);
  CHECK(fixtures::same_structure(sub, fixtures::g_2k2()));
  CHECK(sub.label(u(1)) == "u4");
  const auto joined = disjoint_union(fixtures::p4(), fixtures::make(1, 1, {{1, 1}}));
  CHECK(joined == fixtures::make(3, 3, {{1, 1}, {2, 1}, {2, 2}, {3, 3}}));
}
