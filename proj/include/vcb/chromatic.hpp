#pragma once

#include <array>
#include <optional>

#include "vcb/coloring.hpp"

namespace vcb {

// Fractional coloring: weighted independent sets covering every vertex
// with total value at least one.
struct FractionalColoring {
  std::vector<std::vector<VertexId>> sets;
  std::vector<Rational> values;
  Rational objective;
};

// Matching primal/dual pair of the fractional-coloring LP with equal
// objectives, so both are optimal by strong duality.
struct FcnCertificate {
  FractionalColoring primal;
  std::vector<Rational> dual_z;  // per vertex
  Rational value;
};

// Exact fractional chromatic number 2 + 1/(rho - 1) of a graph that one
// vertex away from bipartite, where 2 rho - 1 is the odd girth. The primal
// uses 2 rho - 1 layer-built independent sets of value 1/(rho - 1); the
// dual spreads 1/(rho - 1) over one shortest odd cycle.
FcnCertificate fcn_single_vertex(const Graph& g, VertexId vp);

struct FcnUpperResult {
  Rational bound;  // min over the three contractions
  std::array<FractionalColoring, 3> certificates;
  std::array<std::optional<int>, 3> rho;  // nullopt when G/V_i is bipartite
  std::array<bool, 3> contraction_bipartite{};
};

// Upper bound 2 + min_i 1/(rho_i - 1) for a 3-colorable graph: contract
// each class, run the single-vertex construction and lift the sets back by
// replacing the contracted node with the class. When a contraction is
// bipartite the class contributes the trivial bound 2 (flagged).
FcnUpperResult fcn_upper_3colorable(const Graph& g, const Coloring& coloring);

// Integrality gap of the relaxation as a function of the fractional
// chromatic number: 2 - 2/chi^f.
Rational integrality_gap(const Rational& fcn_value);

// Feasibility of a fractional coloring: independent sets, non-negative
// values, unit coverage at every vertex, objective equals the value sum.
bool fractional_coloring_feasible(const Graph& g, const FractionalColoring& fc);

}  // namespace vcb
