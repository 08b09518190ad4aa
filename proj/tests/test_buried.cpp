#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "tdorg/aux_graphs.hpp"
#include "tdorg/buried.hpp"
#include "tdorg/classify.hpp"
#include "tdorg/errors.hpp"

using namespace tdorg;
using fixtures::u;
using fixtures::v;

namespace {

VertexSet set_of(const BipartiteGraph& g, const char* text) { return parse_vertex_set(g, text); }

// All 2^n subsets through the public checker.
std::vector<VertexSet> by_checker(const BipartiteGraph& g) {
  std::vector<VertexSet> out;
  const int n = g.vertex_count();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexSet b;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) b.push_back(g.ref(i));
    }
    if (is_buried_subgraph(g, b)) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("vertex set text") {
  const auto g = fixtures::g_s();
  CHECK(format_vertex_set(set_of(g, "v2 u1,u1 v1")) == "u1 v1 v2");
  CHECK_THROWS_AS(set_of(g, "u9"), PreconditionError);
  CHECK_THROWS_AS(set_of(g, "w1"), PreconditionError);
}

TEST_CASE("buried subgraphs of G_S") {
  const auto g = fixtures::g_s();
  const auto b1 = set_of(g, "u1 v1 u2 v2 u3 v3");
  const auto b2 = set_of(g, "u4 v4 u5 v5");
  CHECK(is_buried_subgraph(g, b1));
  CHECK(is_buried_subgraph(g, b2));
  const auto all = enumerate_buried_subgraphs(g);
  CHECK(std::binary_search(all.begin(), all.end(), b1));
  CHECK(std::binary_search(all.begin(), all.end(), b2));
  CHECK(all == by_checker(g));

  const auto k1 = k_sets(g, b1);
  CHECK(k1.k_u.empty());
  CHECK(k1.k_v == std::vector<int>{3, 4});
  const auto k2 = k_sets(g, b2);
  CHECK(k2.k_u == std::vector<int>{0, 1, 2});  // u1, u2, u3 all see v4 and v5
  CHECK(k2.k_v.empty());
}

TEST_CASE("violated conditions are reported in order") {
  const auto g = fixtures::g_s();
  auto first = [&](const char* text) { return is_buried_subgraph(g, set_of(g, text)).violated; };
  CHECK(first("u1 v1") == BuriedCondition::A);
  CHECK(first("u1 v1 u3 v3") == BuriedCondition::B);  // v2 sees u1 but not u3
  CHECK(first("u1 v1 u2 v2 u3 v3 u4 v4 u5 v5") == BuriedCondition::C);
  const auto d = is_buried_subgraph(g, set_of(g, "u1 v1 u2 v2 u3 v3 v4"));
  CHECK_FALSE(d.satisfied[3]);

  const auto ok = is_buried_subgraph(g, set_of(g, "u4 v4 u5 v5"));
  REQUIRE(ok.inner_pair.has_value());
  REQUIRE(ok.outer_pair.has_value());
  CHECK(are_independent_edges(g, ok.inner_pair->first, ok.inner_pair->second));
  CHECK(are_independent_edges(g, ok.outer_pair->first, ok.outer_pair->second));
}

TEST_CASE("G_E and P4 have no buried subgraph") {
  const auto ge = fixtures::g_e();
  CHECK(by_checker(ge).empty());
  CHECK(enumerate_buried_subgraphs(ge).empty());
  CHECK_FALSE(find_buried_subgraph(ge).has_value());
  CHECK_FALSE(find_buried_subgraph(fixtures::p4()).has_value());
}

TEST_CASE("enumeration matches the checker on arbitrary graphs") {
  CHECK(enumerate_buried_subgraphs(fixtures::c6()) == by_checker(fixtures::c6()));
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto g = random_bipartite(4, 5, 0.5, s);
    CHECK(enumerate_buried_subgraphs(g) == by_checker(g));
  }
  CHECK_THROWS_AS(enumerate_buried_subgraphs(BipartiteGraph(9, 8, {})), GuardError);
}

TEST_CASE("k_sets preconditions") {
  const auto g = fixtures::g_2k2();
  CHECK_THROWS_AS(k_sets(g, set_of(g, "u1 v1")), PreconditionError);
}

TEST_CASE("extraction on G_S") {
  const auto g = fixtures::g_s();
  const auto wo = weak_ordering_from_representation(g, fixtures::rep(g, fixtures::kSTopX, fixtures::kSTopY));
  const auto ex = find_buried_subgraph(g, wo);
  REQUIRE(ex.has_value());
  CHECK(ex->subgraph.vertices == set_of(g, "u1 u2 u3 v1 v2 v3"));
  CHECK(ex->u_left == u(2));
  CHECK(ex->u_right == u(3));
  CHECK(extraction_claims_hold(g, *ex));

  const auto any = find_buried_subgraph(g);
  REQUIRE(any.has_value());
  const auto& vs = any->subgraph.vertices;
  CHECK((vs == set_of(g, "u1 v1 u2 v2 u3 v3") || vs == set_of(g, "u4 v4 u5 v5")));

  CHECK_THROWS_AS(find_buried_subgraph(fixtures::g_2k2()), PreconditionError);
  CHECK_THROWS_AS(find_buried_subgraph(fixtures::c6()), PreconditionError);
  CHECK_THROWS_AS(find_buried_subgraph(g, WeakOrdering{{0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}}), PreconditionError);
}

TEST_CASE("extraction agrees with enumeration on random 2DORGs") {
  std::size_t with_buried = 0;
  for (const auto& [g, seed] : corpus::component_2dorgs(1000, 10, 21, 14, true)) {
    const auto ex = find_buried_subgraph(g);
    const auto all = enumerate_buried_subgraphs(g);
    CHECK(ex.has_value() == !all.empty());
    CHECK(ex.has_value() == (build_g_plus(g).nontrivial_count() > 2));
    if (!ex) continue;
    ++with_buried;
    CHECK(std::binary_search(all.begin(), all.end(), ex->subgraph.vertices));
    CHECK(extraction_claims_hold(g, *ex));
    for (const auto& b : all) CHECK_NOTHROW(k_sets(g, b));
  }
  CHECK(with_buried > 20);
}

TEST_CASE("substitution") {
  const auto g = fixtures::g_s();
  const auto b1 = set_of(g, "u1 v1 u2 v2 u3 v3");
  const auto sub = substitute_buried(g, b1, fixtures::edge(g, 1, 1));
  CHECK(fixtures::same_structure(sub.graph, fixtures::make(3, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {3, 3}})));
  CHECK(sub.graph.label(u(2)) == "u4");
  CHECK(sub.graph.label(v(3)) == "v5");
  CHECK(is_2dorg(sub.graph));
  CHECK(is_simplicial_edge(sub.graph, sub.kept));
  CHECK(sub.mapping[g.id(u(2))] == std::nullopt);
  CHECK(sub.mapping[g.id(u(4))] == u(2));

  const auto b2 = set_of(g, "u4 v4 u5 v5");
  const auto sub2 = substitute_buried(g, b2, fixtures::edge(g, 4, 4));
  CHECK(sub2.graph.vertex_count() == 8);
  std::vector<VertexRef> moved;
  for (const auto& x : b1) moved.push_back(*sub2.mapping[g.id(x)]);
  // u4v4 is the only edge left outside B1 and every u of B1 sees v4, so (c) fails
  const auto again = is_buried_subgraph(sub2.graph, make_vertex_set(sub2.graph, moved));
  CHECK(again.violated == BuriedCondition::C);
  CHECK(again.satisfied[0]);
  CHECK(again.satisfied[1]);
  CHECK(again.satisfied[3]);

  CHECK_THROWS_AS(substitute_buried(g, b1, fixtures::edge(g, 4, 4)), PreconditionError);
  CHECK_THROWS_AS(substitute_buried(g, set_of(g, "u1 v1"), fixtures::edge(g, 1, 1)), PreconditionError);

  for (const auto& [h, seed] : corpus::component_2dorgs(300, 10, 77, 14, true)) {
    for (const auto& b : enumerate_buried_subgraphs(h)) {
      for (const auto& e : h.edges()) {
        if (!std::binary_search(b.begin(), b.end(), VertexRef{Side::U, e.u}) ||
            !std::binary_search(b.begin(), b.end(), VertexRef{Side::V, e.v})) {
          continue;
        }
        const auto s = substitute_buried(h, b, e);
        CHECK(is_2dorg(s.graph));
        CHECK(is_simplicial_edge(s.graph, s.kept));
        break;
      }
    }
  }
}

TEST_CASE("simplicial edges") {
  const auto ge = fixtures::g_e();
  CHECK(is_simplicial_edge(ge, fixtures::edge(ge, 2, 2)));
  const auto c6 = fixtures::c6();
  for (const auto& e : c6.edges()) CHECK_FALSE(is_simplicial_edge(c6, e));
  CHECK_THROWS_AS(is_simplicial_edge(ge, EdgeRef{1, 0, 0}), PreconditionError);
}
