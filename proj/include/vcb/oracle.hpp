#pragma once

#include <vector>

#include "vcb/graph.hpp"

namespace vcb {

// Size limits for the exponential ground-truth engines. The oracles refuse
// inputs above these limits instead of silently running forever.
struct OracleBudget {
  int max_vertices_exact = 20;
  int max_vertices_lp_enum = 12;
  int max_vertices_fcn = 12;
};

struct BruteCover {
  std::vector<VertexId> cover;
  Rational weight;
};

// Exact minimum-weight vertex cover by branching on the endpoints of the
// first uncovered edge; ties between equal-weight optima are broken by the
// lexicographically smallest cover.
BruteCover brute_opt_vc(const Graph& g, const OracleBudget& budget = {});

// Minimum objective over all feasible points of {0, 1/2, 1}^V, which equals
// the LP optimum by half-integrality of the relaxation's extreme points.
Rational brute_lp(const Graph& g, const OracleBudget& budget = {});

// Exact fractional chromatic number: the covering LP over all maximal
// independent sets, solved by exact rational simplex on the packing dual.
Rational brute_fcn(const Graph& g, const OracleBudget& budget = {});

// All maximal independent sets of a small graph, in bitmask order.
std::vector<std::vector<VertexId>> maximal_independent_sets(const Graph& g,
                                                            int max_vertices = 20);

}  // namespace vcb
