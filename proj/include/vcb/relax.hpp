#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vcb/graph.hpp"

namespace vcb {

// Optimal solution of the standard vertex-cover relaxation; every value is
// 0, 1/2 or 1 and the objective is the exact LP optimum.
struct HalfIntegralSolution {
  std::vector<Rational> values;  // indexed by VertexId
  Rational objective;
};

// Feasible dual of the relaxation: y >= 0 with y(delta(v)) <= w_v.
struct DualSolution {
  std::vector<Rational> values;  // indexed by EdgeId
  Rational total;
};

DualSolution make_dual(const Graph& g, std::vector<Rational> values);

// The three LP classes plus the subgraph induced by the half vertices.
struct NTDecomposition {
  std::vector<VertexId> zero;
  std::vector<VertexId> half;
  std::vector<VertexId> one;
  Subgraph half_subgraph;
};

// Solves the relaxation exactly by reducing to minimum-weight vertex cover
// on the bipartite double cover (two copies per vertex, crossed edges) via
// max-flow/min-cut, then folding the two copies back together. The cover is
// read from source-side reachability of the final residual network, so the
// result is deterministic; when the all-half point is optimal it is the
// solution returned.
HalfIntegralSolution solve_lp(const Graph& g);

NTDecomposition nt_decompose(const Graph& g, const HalfIntegralSolution& x);

// Scales weights so that w(V) = 2, i.e. the LP optimum of an all-half
// solution becomes one.
Graph normalize(const Graph& g);

// Finds y >= 0 with y(delta(v)) = w_v for every vertex, or nullopt iff no
// such dual exists (equivalently: the all-half solution is not optimal).
// Requires a normalized graph, which forces y(E) = 1. Solved as a max-flow
// saturation problem on the double cover; ties are resolved by edge order,
// and the returned dual is one feasible choice among possibly many.
std::optional<DualSolution> recover_dual(const Graph& g);

// Weight vector sum lambda_e * (1_u + 1_v) over edges; the lambdas must be
// a convex combination. By construction the result lies in Q^W.
Graph weights_from_edge_combination(const Graph& g, std::span<const Rational> lambda);

// Random convex combination of edge-indicator extreme points; deterministic
// for a fixed seed.
Graph sample_qw(const Graph& g, unsigned long long seed);

// True when y(delta(v)) = w_v holds at every vertex (the complementary
// slackness certificate that w lies in the cone over Q^W).
bool dual_is_tight(const Graph& g, const DualSolution& y);

}  // namespace vcb
