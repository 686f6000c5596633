#include <doctest.h>

#include "test_support.hpp"
#include "vcb/bounds.hpp"
#include "vcb/error.hpp"
#include "vcb/oracle.hpp"
#include "vcb/tightgen.hpp"

using namespace vcb;

namespace {

std::vector<VertexId> full_cycle(int len) {
  std::vector<VertexId> cycle(len);
  for (int i = 0; i < len; ++i) cycle[i] = i;
  return cycle;
}

// Shared checks for every generated tight instance.
void check_tight(const Graph& g, const DualSolution& dual,
                 const std::vector<VertexId>& s, const Rational& expected) {
  CHECK(dual_is_tight(g, dual));
  CHECK(g.total_weight() == 2);
  CHECK(brute_opt_vc(g).weight == 1);
  const auto report = analyze(g, s, dual);
  REQUIRE(report.bound_applicable);
  CHECK(report.achieved == expected);
  CHECK(report.bound == expected);
}

}  // namespace

TEST_CASE("basic weight function on odd cycles") {
  {
    const Graph g = Graph::cycle(5);
    const auto weighted = basic_weight(g, 0, full_cycle(5));
    CHECK(weighted.graph.weight(0) == Rational(2, 3));
    for (VertexId v = 1; v < 5; ++v)
      CHECK(weighted.graph.weight(v) == Rational(1, 3));
    check_tight(weighted.graph, weighted.dual, {0}, Rational(4, 3));
  }
  {
    const Graph g = Graph::complete(3);
    const auto weighted = basic_weight(g, 0, full_cycle(3));
    CHECK(weighted.graph.weight(0) == 1);
    CHECK(weighted.graph.weight(1) == Rational(1, 2));
    CHECK(weighted.graph.weight(2) == Rational(1, 2));
    check_tight(weighted.graph, weighted.dual, {0}, Rational(3, 2));
  }
  {
    const Graph g = Graph::cycle(7);
    const auto weighted = basic_weight(g, 0, full_cycle(7));
    CHECK(weighted.graph.weight(0) == Rational(1, 2));
    CHECK(weighted.graph.weight(3) == Rational(1, 4));
    // Brute force: OPT = 1 and OPT(G \ v_p) = 3/4, so the ratio is 5/4.
    check_tight(weighted.graph, weighted.dual, {0}, Rational(5, 4));
  }
}

TEST_CASE("basic weight rejects bad cycles") {
  const Graph g = Graph::cycle(5);
  CHECK_THROWS_AS((void)basic_weight(g, 0, std::vector<VertexId>{0, 1, 2}),
                  Error);
  CHECK_THROWS_AS((void)basic_weight(g, 0, std::vector<VertexId>{1, 2, 3, 4}),
                  Error);
  Graph with_triangle = Graph::cycle(5);
  with_triangle.add_edge(0, 2);
  // C5 is no longer shortest once the chord creates a triangle.
  CHECK_THROWS_AS((void)basic_weight(with_triangle, 0, full_cycle(5)), Error);
}

TEST_CASE("convex combinations of basic weight functions") {
  const Graph g = Graph::cycle(5);
  {
    const std::vector<CycleWeight> single{{full_cycle(5), 1}};
    const auto convex = convex_weight(g, 0, single);
    const auto basic = basic_weight(g, 0, full_cycle(5));
    for (VertexId v = 0; v < 5; ++v)
      CHECK(convex.graph.weight(v) == basic.graph.weight(v));
  }
  {
    // Two 5-cycles glued at vertex 0.
    Graph glued(1, 0);
    std::vector<CycleWeight> combination;
    for (int c = 0; c < 2; ++c) {
      std::vector<VertexId> cycle{0};
      VertexId prev = 0;
      for (int i = 1; i < 5; ++i) {
        const VertexId v = glued.add_vertex(0);
        glued.add_edge(prev, v);
        cycle.push_back(v);
        prev = v;
      }
      glued.add_edge(prev, 0);
      combination.push_back({cycle, Rational(1, 2)});
    }
    const auto convex = convex_weight(glued, 0, combination);
    check_tight(convex.graph, convex.dual, {0}, Rational(4, 3));
    // Dropping a zero-lambda cycle changes nothing.
    combination[0].lambda = 1;
    combination[1].lambda = 0;
    const auto degenerate = convex_weight(glued, 0, combination);
    const std::vector<CycleWeight> only{{combination[0].cycle, 1}};
    const auto direct = convex_weight(glued, 0, only);
    for (VertexId v = 0; v < glued.vertex_count(); ++v)
      CHECK(degenerate.graph.weight(v) == direct.graph.weight(v));
  }
  const std::vector<CycleWeight> bad{{full_cycle(5), Rational(1, 2)}};
  CHECK_THROWS_AS((void)convex_weight(g, 0, bad), Error);
}

TEST_CASE("lifted dual weights on C9 with an independent pair") {
  const Graph c9 = Graph::cycle(9);
  const std::vector<VertexId> indep{0, 3};
  const auto ct = contract(c9, indep);
  const auto cycles = shortest_odd_cycles(ct.graph, ct.contracted, 8);
  REQUIRE(!cycles.cycles.empty());
  const auto weighted = lifted_dual_weight(c9, indep, cycles.cycles.front());
  check_tight(weighted.graph, weighted.dual, indep, Rational(3, 2));
  // w(I) = 2/rho with rho = 2 here.
  CHECK(weighted.graph.weight_of(indep) == 1);
}

TEST_CASE("lifted dual weight with a singleton reduces to the basic function") {
  const Graph g = Graph::cycle(5);
  const std::vector<VertexId> indep{2};
  const auto ct = contract(g, indep);
  const auto cycles = shortest_odd_cycles(ct.graph, ct.contracted, 4);
  REQUIRE(cycles.cycles.size() == 1);
  const auto lifted = lifted_dual_weight(g, indep, cycles.cycles.front());
  const std::vector<VertexId> cycle{2, 3, 4, 0, 1};
  const auto basic = basic_weight(g, 2, cycle);
  for (VertexId v = 0; v < 5; ++v)
    CHECK(lifted.graph.weight(v) == basic.graph.weight(v));
}

TEST_CASE("lifted dual weight rejects dependent sets") {
  const Graph c9 = Graph::cycle(9);
  CHECK_THROWS_AS(
      (void)lifted_dual_weight(c9, std::vector<VertexId>{0, 1},
                               std::vector<VertexId>{0, 1, 2}),
      Error);
}

TEST_CASE("alpha-rho generator hits the interpolated bound") {
  {
    const auto tight = gen_alpha_rho(0, 3);
    check_tight(tight.graph, tight.dual, tight.s, Rational(4, 3));
    CHECK(tight.expected_ratio == Rational(4, 3));
  }
  {
    const auto tight = gen_alpha_rho(Rational(1, 2), 2);
    CHECK(tight.expected_ratio == Rational(7, 4));
    CHECK(tight.graph.weight_of(tight.s) == Rational(3, 2));
    check_tight(tight.graph, tight.dual, tight.s, Rational(7, 4));
  }
  {
    const auto tight = gen_alpha_rho(1, 4);
    CHECK(tight.expected_ratio == 2);
    check_tight(tight.graph, tight.dual, tight.s, 2);
  }
  CHECK_THROWS_AS((void)gen_alpha_rho(Rational(3, 2), 2), Error);
  CHECK_THROWS_AS((void)gen_alpha_rho(0, 1), Error);
}

TEST_CASE("alpha-rho generator with odd denominators and larger rho") {
  const Rational alphas[] = {Rational(1, 3), Rational(2, 7), Rational(5, 6)};
  for (const Rational& alpha : alphas) {
    for (int rho = 2; rho <= 6; ++rho) {
      const auto tight = gen_alpha_rho(alpha, rho);
      const Rational expected = (1 + Rational(1, rho)) * (1 - alpha) + 2 * alpha;
      CHECK(tight.expected_ratio == expected);
      check_tight(tight.graph, tight.dual, tight.s, expected);
    }
  }
}

TEST_CASE("alpha-bipartite generator on longer cycles") {
  for (int len : {7, 9, 11}) {
    const auto tight = gen_alpha_bipartite(Rational(2, 5), len);
    check_tight(tight.graph, tight.dual, tight.s, Rational(7, 5));
  }
}

TEST_CASE("alpha-bipartite generator interpolates between 1 and 2") {
  {
    const auto tight = gen_alpha_bipartite(Rational(1, 2), 5);
    CHECK(tight.expected_ratio == Rational(3, 2));
    CHECK(tight.graph.weight_of(tight.s) == Rational(5, 4));
    check_tight(tight.graph, tight.dual, tight.s, Rational(3, 2));
    // The contraction by S is bipartite here.
    CHECK(!odd_girth(contract(tight.graph, tight.s).graph).has_value());
  }
  {
    const auto tight = gen_alpha_bipartite(0, 7);
    CHECK(tight.expected_ratio == 1);
    check_tight(tight.graph, tight.dual, tight.s, 1);
  }
  {
    const auto tight = gen_alpha_bipartite(1, 5);
    CHECK(tight.expected_ratio == 2);
    check_tight(tight.graph, tight.dual, tight.s, 2);
  }
  CHECK_THROWS_AS((void)gen_alpha_bipartite(0, 6), Error);
  CHECK_THROWS_AS((void)gen_alpha_bipartite(0, 3), Error);
}

TEST_CASE("shortest odd cycle enumeration") {
  {
    const auto cycles = shortest_odd_cycles(Graph::cycle(5), 0, 8);
    CHECK(cycles.cycles.size() == 1);
    CHECK(!cycles.truncated);
  }
  {
    // Two 5-cycles glued at vertex 0.
    Graph glued(1);
    for (int c = 0; c < 2; ++c) {
      VertexId prev = 0;
      for (int i = 1; i < 5; ++i) {
        const VertexId v = glued.add_vertex(1);
        glued.add_edge(prev, v);
        prev = v;
      }
      glued.add_edge(prev, 0);
    }
    const auto cycles = shortest_odd_cycles(glued, 0, 8);
    CHECK(cycles.cycles.size() == 2);
  }
  {
    const auto cycles = shortest_odd_cycles(Graph::complete(4), 0, 8);
    CHECK(cycles.cycles.size() == 3);
    for (const auto& cycle : cycles.cycles) CHECK(cycle.size() == 3);
  }
  {
    const auto cycles = shortest_odd_cycles(Graph::complete(4), 0, 2);
    CHECK(cycles.cycles.size() == 2);
    CHECK(cycles.truncated);
  }
  CHECK_THROWS_AS((void)shortest_odd_cycles(Graph::cycle(4), 0, 8), Error);
}
