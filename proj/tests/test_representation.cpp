#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "tdorg/errors.hpp"
#include "tdorg/generators.hpp"
#include "tdorg/independence.hpp"
#include "tdorg/oracle.hpp"
#include "tdorg/representation.hpp"

using namespace tdorg;
using fixtures::rep;
using fixtures::u;
using fixtures::v;

TEST_CASE("representation text format") {
  const auto g = fixtures::g_e();
  const auto r1 = rep(g, fixtures::kR1x, fixtures::kR1y);
  CHECK(format_representation(r1) == "x: u1 v1 u2 v2 u3 v3\ny: u1 v1 u3 v3 u2 v2\n");
  CHECK(parse_representation(format_representation(r1), g) == r1);
  CHECK_THROWS_AS(parse_representation("x: u1 v1 u2 v2 u3\ny: u1 v1 u3 v3 u2 v2\n", g), ParseError);
  CHECK_THROWS_AS(parse_representation("x: u1 v1 u2 v2 u3 u3\ny: u1 v1 u3 v3 u2 v2\n", g), ParseError);
  CHECK_THROWS_AS(parse_representation("x: u1 v1 u2 v2 u3 v3\n", g), ParseError);
}

TEST_CASE("realizes") {
  const auto g = fixtures::g_e();
  CHECK(realizes(g, rep(g, fixtures::kR1x, fixtures::kR1y)));
  CHECK(realizes(g, rep(g, fixtures::kR2x, fixtures::kR2y)));
  CHECK_FALSE(realizes(g, rep(g, fixtures::kR1x, fixtures::kR1x)));
  Representation short_rep{{u(1)}, {u(1)}};
  CHECK_THROWS_AS(realizes(g, short_rep), PreconditionError);
}

TEST_CASE("is_normalized on the reference representations") {
  const auto g = fixtures::g_e();
  CHECK(is_normalized(g, rep(g, fixtures::kR1x, fixtures::kR1y)));
  const auto r2 = is_normalized(g, rep(g, fixtures::kR2x, fixtures::kR2y));
  CHECK_FALSE(r2);
  REQUIRE(r2.violation.has_value());
  CHECK(r2.violation->condition == NormalCondition::A);
  CHECK(r2.violation->first == u(1));
  CHECK(r2.violation->second == u(2));
  CHECK(describe(*r2.violation) == "condition (a) on (u1, u2)");
  CHECK_THROWS_AS(is_normalized(g, rep(g, fixtures::kR1x, fixtures::kR1x)), PreconditionError);

  const auto gs = fixtures::g_s();
  CHECK(is_normalized(gs, rep(gs, fixtures::kSTopX, fixtures::kSTopY)));
  CHECK(is_normalized(gs, rep(gs, fixtures::kSBottomX, fixtures::kSBottomY)));
}

TEST_CASE("reverse representation") {
  const auto g = fixtures::g_e();
  const auto r1 = rep(g, fixtures::kR1x, fixtures::kR1y);
  CHECK(reverse_representation(r1) == rep(g, "u1 v1 u3 v3 u2 v2", "u1 v1 u2 v2 u3 v3"));
  CHECK(reverse_representation(reverse_representation(r1)) == r1);
  CHECK(is_normalized(g, reverse_representation(r1)));
}

TEST_CASE("forced order") {
  const auto p4 = fixtures::p4();
  const auto ig = build_independence_graph(p4);
  const auto fo = build_forced_order(p4, ig, transitive_orientation(ig));
  CHECK(fo.induced.empty());
  CHECK(fo.forced.size() == 6);  // D alone covers all pairs of 4 vertices
  const auto expected = std::vector<std::pair<int, int>>{{p4.id(u(2)), p4.id(u(1))}};
  CHECK(std::find(fo.forced.begin(), fo.forced.end(), expected[0]) != fo.forced.end());

  const auto r = construct_normalized_representation(p4);
  const auto oracle = brute_force_normalized_representations(p4);
  REQUIRE(oracle.size() == 1);
  CHECK(r == oracle[0]);

  const auto ge = fixtures::g_e();
  const auto ige = build_independence_graph(ge);
  const auto rep_e = representation_from_orientation(ge, ige, transitive_orientation(ige));
  const auto oracle_e = brute_force_normalized_representations(ge);
  CHECK(std::find(oracle_e.begin(), oracle_e.end(), rep_e) != oracle_e.end());

  const auto twins = fixtures::make(1, 2, {{1, 1}, {1, 2}});
  const auto igt = build_independence_graph(twins);
  try {
    build_forced_order(twins, igt, transitive_orientation(igt));
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("v1") != std::string::npos);
    CHECK(std::string(e.what()).find("v2") != std::string::npos);
  }
}

TEST_CASE("construction on the fixtures") {
  const auto ge = fixtures::g_e();
  const auto r = construct_normalized_representation(ge);
  CHECK(realizes(ge, r));
  CHECK(is_normalized(ge, r));
  const auto gs = fixtures::g_s();
  CHECK(is_normalized(gs, construct_normalized_representation(gs)));
  CHECK_THROWS_AS(construct_normalized_representation(fixtures::c6()), PreconditionError);
  CHECK_THROWS_AS(construct_normalized_representation(fixtures::make(1, 2, {{1, 1}, {1, 2}})), PreconditionError);
}

TEST_CASE("construction on random 2DORGs") {
  for (const auto& [g, seed] : corpus::random_2dorgs(500, 7, 7, 5, false)) {
    const auto r = construct_normalized_representation(g);
    CHECK(realizes(g, r));
    CHECK(is_normalized(g, r));
    CHECK((r.order_x == r.order_y) == is_chain_graph(g));
    CHECK_FALSE(interleaving_violation(g, r).has_value());
    const auto wo = weak_ordering_from_representation(g, r);
    CHECK(is_weak_ordering(g, wo));
    CHECK(is_normalized_weak_ordering(g, wo));

    const auto ig = build_independence_graph(g);
    for (const auto& f : enumerate_transitive_orientations(ig)) {
      const auto a = representation_from_orientation(g, ig, f);
      const auto b = representation_from_orientation(g, ig, f.reversed());
      CHECK(b == reverse_representation(a));
    }
  }
}

TEST_CASE("forward implications hold for every realizing representation") {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const auto gen = random_2dorg(4, 4, s);
    const auto& g = gen.graph;
    const auto& r = gen.representation;
    const auto rx = ranks(g, r.order_x);
    const auto ry = ranks(g, r.order_y);
    auto before = [&](VertexRef a, VertexRef b) { return rx[g.id(a)] < rx[g.id(b)] && ry[g.id(a)] < ry[g.id(b)]; };
    for (const auto& a : g.vertices()) {
      for (const auto& b : g.vertices()) {
        if (a == b) continue;
        if (a.side == Side::U && b.side == Side::U && before(a, b)) {
          CHECK(std::includes(g.neighbors(a).begin(), g.neighbors(a).end(), g.neighbors(b).begin(),
                              g.neighbors(b).end()));
        }
        if (a.side == Side::V && b.side == Side::V && before(a, b)) {
          CHECK(std::includes(g.neighbors(b).begin(), g.neighbors(b).end(), g.neighbors(a).begin(),
                              g.neighbors(a).end()));
        }
      }
    }
    CHECK_FALSE(interleaving_violation(g, r).has_value());
  }
}

TEST_CASE("weak orderings") {
  const auto ge = fixtures::g_e();
  const auto wo = weak_ordering_from_representation(ge, rep(ge, fixtures::kR1x, fixtures::kR1y));
  CHECK(wo.order_u == std::vector<int>{1, 2, 0});
  CHECK(wo.order_v == std::vector<int>{0, 1, 2});
  CHECK(is_weak_ordering(ge, wo));
  CHECK(is_normalized_weak_ordering(ge, wo));
  const WeakOrdering plain{{0, 1, 2}, {0, 1, 2}};
  CHECK_FALSE(is_normalized_weak_ordering(ge, plain));
  CHECK_THROWS_AS(is_weak_ordering(ge, WeakOrdering{{0, 1}, {0, 1, 2}}), PreconditionError);
  CHECK_THROWS_AS(weak_ordering_from_representation(ge, rep(ge, fixtures::kR2x, fixtures::kR2y)),
                  PreconditionError);

  const auto gs = fixtures::g_s();
  const auto wos = weak_ordering_from_representation(gs, rep(gs, fixtures::kSTopX, fixtures::kSTopY));
  CHECK(wos.order_u == std::vector<int>{3, 4, 1, 0, 2});
  CHECK(wos.order_v == std::vector<int>{0, 1, 2, 3, 4});

  const auto p4 = fixtures::p4();
  const auto wop = weak_ordering_from_representation(p4, construct_normalized_representation(p4));
  CHECK(wop.order_u == std::vector<int>{0, 1});  // N(u1) inside N(u2)
  CHECK(wop.order_v == std::vector<int>{1, 0});  // N(v2) inside N(v1)

  // C6 has no weak ordering at all
  const auto c6 = fixtures::c6();
  std::vector<int> pu{0, 1, 2};
  std::size_t tried = 0;
  do {
    std::vector<int> pv{0, 1, 2};
    do {
      CHECK_FALSE(is_weak_ordering(c6, WeakOrdering{pu, pv}));
      ++tried;
    } while (std::next_permutation(pv.begin(), pv.end()));
  } while (std::next_permutation(pu.begin(), pu.end()));
  CHECK(tried == 36);
}
