#pragma once

#include <span>
#include <vector>

#include "vcb/relax.hpp"

namespace vcb {

// Weights together with the dual that certifies them: y(delta(v)) = w_v.
struct WeightedInstance {
  Graph graph;
  DualSolution dual;
};

// A full worst-case instance: the rounding on s achieves expected_ratio
// exactly, and the ratio equals the theoretical bound for its (rho, alpha).
struct TightInstance {
  Graph graph;
  DualSolution dual;
  std::vector<VertexId> s;
  Rational expected_ratio;
};

struct CycleWeight {
  std::vector<VertexId> cycle;
  Rational lambda;
};

struct CycleEnumeration {
  std::vector<std::vector<VertexId>> cycles;
  bool truncated = false;
};

// Weight 2/rho on vp, 1/rho on the rest of the cycle, zero elsewhere; the
// companion dual puts 1/rho on both cycle edges at vp and alternates 0 and
// 1/rho along the cycle. The cycle must be a shortest odd cycle through vp.
WeightedInstance basic_weight(const Graph& g, VertexId vp,
                              std::span<const VertexId> cycle);

// Convex combination of basic weight functions over several shortest odd
// cycles through vp; the duals combine the same way.
WeightedInstance convex_weight(const Graph& g, VertexId vp,
                               std::span<const CycleWeight> combination);

// Builds the cycle dual on G/I for a shortest odd cycle through the
// contracted node, pulls it back through the edge bijection and installs
// w(v) = y(delta(v)). The set must be independent and bipartizing.
WeightedInstance lifted_dual_weight(const Graph& g,
                                    std::span<const VertexId> indep_set,
                                    std::span<const VertexId> contracted_cycle);

// Odd cycle of length 2 rho - 1 whose distinguished node is expanded into a
// triangle carrying dual mass alpha; the ratio interpolates to
// (1 + 1/rho)(1 - alpha) + 2 alpha exactly.
TightInstance gen_alpha_rho(const Rational& alpha, int rho);

// Odd cycle with S the endpoints of the alpha-edge; the contraction G/S is
// bipartite and the ratio is 1 + alpha exactly. The remaining dual mass is
// spread by alternating (1 - alpha)/m and zero away from S.
TightInstance gen_alpha_bipartite(const Rational& alpha, int cycle_len);

// Deterministic enumeration of distinct shortest odd cycles through vp,
// capped at `limit` (the count of such cycles can explode).
CycleEnumeration shortest_odd_cycles(const Graph& g, VertexId vp, int limit = 64);

}  // namespace vcb
