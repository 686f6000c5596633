#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "vcb/bounds.hpp"
#include "vcb/error.hpp"
#include "vcb/tightgen.hpp"

using namespace vcb;

TEST_CASE("compute_alpha basics") {
  const Graph g = normalize(Graph::cycle(5));
  const auto y = recover_dual(g);
  REQUIRE(y.has_value());
  CHECK(compute_alpha(*y, std::vector<VertexId>{0, 2}, g) == 0);
  CHECK(compute_alpha(*y, std::vector<VertexId>{0, 1, 2, 3, 4}, g) == 1);
  CHECK(compute_alpha(*y, std::vector<VertexId>{0, 1}, g) == Rational(1, 5));

  DualSolution unnormalized = *y;
  unnormalized.total = Rational(1, 2);
  CHECK_THROWS_AS((void)compute_alpha(unnormalized, std::vector<VertexId>{0}, g),
                  Error);
}

TEST_CASE("theoretical bound formula and endpoints") {
  CHECK(theoretical_bound(2, 0) == Rational(3, 2));
  CHECK(theoretical_bound(3, 0) == Rational(4, 3));
  CHECK(theoretical_bound(2, Rational(1, 2)) == Rational(7, 4));
  CHECK(theoretical_bound(std::nullopt, Rational(1, 2)) == Rational(3, 2));
  CHECK(theoretical_bound(std::nullopt, 0) == 1);
  CHECK(theoretical_bound(std::nullopt, 1) == 2);
  for (int rho = 2; rho <= 6; ++rho) {
    CHECK(theoretical_bound(rho, 0) == 1 + Rational(1, rho));
    CHECK(theoretical_bound(rho, 1) == 2);
  }
  CHECK_THROWS_AS((void)theoretical_bound(1, 0), Error);
  CHECK_THROWS_AS((void)theoretical_bound(0, 0), Error);
  CHECK_THROWS_AS((void)theoretical_bound(2, 2), Error);
}

TEST_CASE("bound is monotone in alpha and rho") {
  for (int rho = 2; rho <= 5; ++rho) {
    Rational previous = -1;
    for (int i = 0; i <= 8; ++i) {
      const Rational alpha(i, 8);
      const Rational bound = theoretical_bound(rho, alpha);
      CHECK(bound >= previous);
      previous = bound;
      if (rho > 2) CHECK(bound <= theoretical_bound(rho - 1, alpha));
    }
  }
}

TEST_CASE("analyze the C5 basic-weight tight instance") {
  Graph g = Graph::cycle(5);
  g.set_weight(0, Rational(2, 3));
  for (VertexId v = 1; v < 5; ++v) g.set_weight(v, Rational(1, 3));
  const auto report = analyze(g, std::vector<VertexId>{0});
  REQUIRE(report.bound_applicable);
  CHECK(report.rho == 3);
  CHECK(report.alpha == 0);
  CHECK(report.case_tag == CaseTag::SingleVertex);
  CHECK(report.bound == Rational(4, 3));
  CHECK(report.achieved == Rational(4, 3));
  CHECK(report.opt_mode == OptMode::BruteExact);
}

TEST_CASE("analyze C9 with the lifted independent-set weights") {
  const Graph c9 = Graph::cycle(9);
  const std::vector<VertexId> indep{0, 3};
  const auto ct = contract(c9, indep);
  const auto cycles = shortest_odd_cycles(ct.graph, ct.contracted, 8);
  REQUIRE(!cycles.cycles.empty());
  const auto weighted = lifted_dual_weight(c9, indep, cycles.cycles.front());
  const auto report = analyze(weighted.graph, indep, weighted.dual);
  REQUIRE(report.bound_applicable);
  CHECK(report.rho == 2);
  CHECK(report.alpha == 0);
  CHECK(report.case_tag == CaseTag::IndependentSet);
  CHECK(report.bound == Rational(3, 2));
  CHECK(report.achieved == Rational(3, 2));
}

TEST_CASE("analyze a bipartite instance with the empty set") {
  const Graph g = Graph::path(2);
  const auto report = analyze(g, std::vector<VertexId>{});
  REQUIRE(report.bound_applicable);
  CHECK(report.case_tag == CaseTag::GeneralBipartite);
  CHECK(!report.rho.has_value());
  CHECK(report.bound == 1);
  CHECK(report.achieved == 1);
}

TEST_CASE("analyze without a certificate falls back to the LP bound") {
  // Concentrated weight pushes the instance outside Q^W.
  Graph g = Graph::cycle(5);
  g.set_weight(0, 10);
  const auto report = analyze(g, std::vector<VertexId>{0});
  CHECK(!report.bound_applicable);
  CHECK(report.opt_mode == OptMode::LPLowerBound);
  CHECK(!report.bound.has_value());
  CHECK(report.achieved >= 1);
}

TEST_CASE("analyze rejects duals that do not certify the weights") {
  Graph g = Graph::cycle(5);
  g.set_weight(0, 10);
  DualSolution junk = make_dual(g, std::vector<Rational>(5, Rational(1, 5)));
  CHECK_THROWS_AS((void)analyze(g, std::vector<VertexId>{0}, junk), Error);
}

TEST_CASE("analyze handles parallel edges through the whole stack") {
  // The C5 tight instance with a duplicated edge carrying zero dual mass:
  // weights stay certified and the ratio is unchanged.
  Graph g = Graph::cycle(5);
  g.add_edge(2, 3);
  g.set_weight(0, Rational(2, 3));
  for (VertexId v = 1; v < 5; ++v) g.set_weight(v, Rational(1, 3));
  const auto report = analyze(g, std::vector<VertexId>{0});
  REQUIRE(report.bound_applicable);
  CHECK(report.rho == 3);
  CHECK(report.bound == Rational(4, 3));
  CHECK(report.achieved == Rational(4, 3));
}

TEST_CASE("achieved stays within the bound for sampled Q^W weights") {
  std::mt19937_64 engine(113);
  const Graph shapes[] = {Graph::cycle(5), Graph::cycle(7), Graph::cycle(9)};
  for (const Graph& shape : shapes) {
    for (int round = 0; round < 25; ++round) {
      const Graph g = sample_qw(shape, engine());
      const auto report = analyze(g, std::vector<VertexId>{0});
      REQUIRE(report.bound_applicable);
      CHECK(report.opt_mode == OptMode::BruteExact);
      CHECK(report.achieved <= report.bound);
    }
  }
}

TEST_CASE("independent sets obey 1 + 1/rho on random instances") {
  std::mt19937_64 engine(127);
  int built = 0;
  for (int round = 0; round < 200 && built < 50; ++round) {
    const int side_a = 2 + static_cast<int>(engine() % 3);
    const int side_b = 2 + static_cast<int>(engine() % 3);
    const int extra = 1 + static_cast<int>(engine() % 2);
    const Graph shape =
        testing::random_near_bipartite(engine, side_a, side_b, extra);
    std::vector<VertexId> indep;
    for (int i = 0; i < extra; ++i) indep.push_back(side_a + side_b + i);
    if (!odd_girth(contract(shape, indep).graph)) continue;
    ++built;
    const Graph g = sample_qw(shape, engine());
    const auto report = analyze(g, indep);
    REQUIRE(report.bound_applicable);
    REQUIRE(report.rho.has_value());
    CHECK(report.alpha == 0);
    CHECK(report.bound == 1 + Rational(1, *report.rho));
    CHECK(report.achieved <= report.bound);
  }
  CHECK(built >= 30);
}
