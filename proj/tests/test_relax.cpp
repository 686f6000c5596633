#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "vcb/error.hpp"
#include "vcb/oracle.hpp"
#include "vcb/relax.hpp"

using namespace vcb;

namespace {

bool solution_feasible(const Graph& g, const HalfIntegralSolution& x) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.ends(e);
    if (x.values[a] + x.values[b] < 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("solve_lp on the unit C5 returns the all-half point") {
  const Graph g = Graph::cycle(5);
  const auto x = solve_lp(g);
  for (const auto& value : x.values) CHECK(value == Rational(1, 2));
  CHECK(x.objective == Rational(5, 2));
}

TEST_CASE("solve_lp uses a free middle vertex") {
  Graph g = Graph::path(3);
  g.set_weight(0, 1);
  g.set_weight(1, 0);
  g.set_weight(2, 1);
  const auto x = solve_lp(g);
  CHECK(x.values == std::vector<Rational>{0, 1, 0});
  CHECK(x.objective == 0);
}

TEST_CASE("solve_lp on the unit star picks the center") {
  const Graph g = Graph::star(3);
  const auto x = solve_lp(g);
  // Exhaustive enumeration over {0, 1/2, 1}^4 gives the unique optimum.
  CHECK(x.objective == 1);
  CHECK(x.values[0] == 1);
  CHECK(x.values[1] == 0);
  CHECK(x.values[2] == 0);
  CHECK(x.values[3] == 0);
  CHECK(brute_lp(g) == 1);
}

TEST_CASE("solve_lp matches enumeration on random weighted graphs") {
  std::mt19937_64 engine(31);
  for (int round = 0; round < 100; ++round) {
    const int n = 1 + static_cast<int>(engine() % 9);
    const Graph g = testing::random_graph(engine, n, 40);
    const auto x = solve_lp(g);
    CHECK(solution_feasible(g, x));
    for (const auto& value : x.values) {
      CHECK((value == 0 || value == Rational(1, 2) || value == 1));
    }
    CHECK(x.objective == brute_lp(g));
  }
}

TEST_CASE("nt_decompose splits C5 and the weighted path") {
  {
    const Graph g = Graph::cycle(5);
    const auto nt = nt_decompose(g, solve_lp(g));
    CHECK(nt.zero.empty());
    CHECK(nt.one.empty());
    CHECK(nt.half.size() == 5);
  }
  {
    Graph g = Graph::path(3);
    g.set_weight(0, 1);
    g.set_weight(1, 0);
    g.set_weight(2, 1);
    const auto nt = nt_decompose(g, solve_lp(g));
    CHECK(nt.one == std::vector<VertexId>{1});
    CHECK(nt.zero == std::vector<VertexId>{0, 2});
    CHECK(nt.half.empty());
  }
}

TEST_CASE("nt_decompose rejects infeasible or non-half-integral input") {
  const Graph g = Graph::path(2);
  HalfIntegralSolution bad;
  bad.values = {0, 0};
  bad.objective = 0;
  CHECK_THROWS_AS((void)nt_decompose(g, bad), Error);
  bad.values = {Rational(1, 3), 1};
  CHECK_THROWS_AS((void)nt_decompose(g, bad), Error);
}

TEST_CASE("NT identity on the triangle with a pendant leaf") {
  Graph g = Graph::complete(3);
  const VertexId leaf = g.add_vertex(1);
  g.add_edge(0, leaf);
  const auto x = solve_lp(g);
  CHECK(x.objective == brute_lp(g));
  const auto nt = nt_decompose(g, x);
  CHECK(nt.zero.size() + nt.half.size() + nt.one.size() == 4);
  const auto opt_full = brute_opt_vc(g);
  const auto opt_half = brute_opt_vc(nt.half_subgraph.graph);
  CHECK(opt_half.weight == opt_full.weight - g.weight_of(nt.one));
}

TEST_CASE("NT identity holds on random instances") {
  std::mt19937_64 engine(37);
  for (int round = 0; round < 80; ++round) {
    const int n = 2 + static_cast<int>(engine() % 13);
    const Graph g = testing::random_graph(engine, n, 35);
    const auto nt = nt_decompose(g, solve_lp(g));
    const auto opt_full = brute_opt_vc(g);
    const auto opt_half = brute_opt_vc(nt.half_subgraph.graph);
    CHECK(opt_half.weight == opt_full.weight - g.weight_of(nt.one));
  }
}

TEST_CASE("normalize scales to total weight two") {
  {
    const Graph g = normalize(Graph::cycle(5));
    for (VertexId v = 0; v < 5; ++v) CHECK(g.weight(v) == Rational(2, 5));
  }
  {
    Graph g = Graph::path(2);
    g.set_weight(0, 3);
    g.set_weight(1, 1);
    const Graph gn = normalize(g);
    CHECK(gn.weight(0) == Rational(3, 2));
    CHECK(gn.weight(1) == Rational(1, 2));
    const Graph again = normalize(gn);
    CHECK(again.weight(0) == gn.weight(0));
    CHECK(again.weight(1) == gn.weight(1));
  }
  Graph zero(2, 0);
  zero.add_edge(0, 1);
  CHECK_THROWS_AS((void)normalize(zero), Error);
}

TEST_CASE("recover_dual on the normalized C5 is the uniform dual") {
  const Graph g = normalize(Graph::cycle(5));
  const auto y = recover_dual(g);
  REQUIRE(y.has_value());
  // y(delta(v)) = 2/5 around an odd cycle has the unique solution 1/5.
  for (const auto& value : y->values) CHECK(value == Rational(1, 5));
  CHECK(y->total == 1);
  CHECK(dual_is_tight(g, *y));
}

TEST_CASE("recover_dual fails when the middle vertex is free") {
  Graph g = Graph::path(3);
  g.set_weight(0, 1);
  g.set_weight(1, 0);
  g.set_weight(2, 1);
  CHECK(!recover_dual(g).has_value());
}

TEST_CASE("recover_dual on K2") {
  Graph g = Graph::path(2);
  const auto y = recover_dual(g);
  REQUIRE(y.has_value());
  CHECK(y->values[0] == 1);
}

TEST_CASE("recover_dual succeeds exactly when the all-half point is optimal") {
  std::mt19937_64 engine(43);
  for (int round = 0; round < 80; ++round) {
    const int n = 2 + static_cast<int>(engine() % 8);
    Graph g = testing::random_graph(engine, n, 45);
    if (g.total_weight() == 0) g.set_weight(0, 1);
    const Graph gn = normalize(g);
    const auto y = recover_dual(gn);
    const bool all_half_optimal = solve_lp(gn).objective == 1;
    CHECK(y.has_value() == all_half_optimal);
    if (y) {
      CHECK(dual_is_tight(gn, *y));
      CHECK(y->total == 1);
    }
  }
}

TEST_CASE("edge combination weights land in Q^W") {
  const Graph c5 = Graph::cycle(5);
  {
    // Concentrated on one edge: the extreme point 1_u + 1_v.
    std::vector<Rational> lambda(5, 0);
    lambda[2] = 1;
    const Graph g = weights_from_edge_combination(c5, lambda);
    CHECK(g.weight(2) == 1);
    CHECK(g.weight(3) == 1);
    CHECK(g.weight(0) == 0);
    CHECK(g.total_weight() == 2);
  }
  {
    const std::vector<Rational> lambda(5, Rational(1, 5));
    const Graph g = weights_from_edge_combination(c5, lambda);
    for (VertexId v = 0; v < 5; ++v) CHECK(g.weight(v) == Rational(2, 5));
  }
  CHECK_THROWS_AS(
      (void)weights_from_edge_combination(c5, std::vector<Rational>(5, 1)),
      Error);
}

TEST_CASE("sample_qw is deterministic and certified") {
  const Graph c5 = Graph::cycle(5);
  const Graph a = sample_qw(c5, 99);
  const Graph b = sample_qw(c5, 99);
  for (VertexId v = 0; v < 5; ++v) CHECK(a.weight(v) == b.weight(v));
  CHECK(a.total_weight() == 2);

  std::mt19937_64 engine(51);
  for (int round = 0; round < 40; ++round) {
    const int n = 3 + static_cast<int>(engine() % 7);
    Graph shape = testing::random_graph(engine, n, 50, false);
    if (shape.edge_count() == 0) shape.add_edge(0, 1);
    const Graph g = sample_qw(shape, engine());
    const auto y = recover_dual(g);
    REQUIRE(y.has_value());
    CHECK(y->total == 1);
    CHECK(brute_lp(g) == 1);
    CHECK(brute_opt_vc(g).weight >= 1);
  }
  Graph edgeless(3);
  CHECK_THROWS_AS((void)sample_qw(edgeless, 1), Error);
}
