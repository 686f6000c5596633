#pragma once

#include <optional>
#include <vector>

#include "vcb/relax.hpp"

namespace vcb {

// A proper coloring: the classes partition V and each one is independent.
struct Coloring {
  std::vector<std::vector<VertexId>> classes;
};

// The approximation-preserving complete-graph instance built from a
// coloring: vertex i carries the weight of the i-th lightest color class
// and the dual collapses classwise. S' is the k-2 lightest classes.
struct AuxTuple {
  Graph k_graph;
  DualSolution k_dual;
  std::vector<VertexId> s_prime;
  std::vector<std::vector<VertexId>> sorted_classes;  // lightest first
};

struct RotationStep {
  EdgeId decreased_inside;  // the E[S'] edge
  EdgeId decreased_heavy;   // the (v_{k-1}, v_k) edge
  EdgeId increased_a;
  EdgeId increased_b;
  Rational epsilon;
};

struct RotationResult {
  AuxTuple aux;
  Rational alpha;  // y'(E[S']) after rotation; at most 1 - 4/k
  std::vector<RotationStep> steps;
};

struct ColoringPipelineResult {
  std::vector<VertexId> s;
  Rational valid_alpha;
  Rational worst_case_bound;  // (1 + 1/2)(1 - alpha) + 2 alpha
  int k = 0;
  AuxTuple aux;  // after rotation
  std::vector<RotationStep> steps;
};

// Saturation-degree greedy (DSATUR); deterministic under vertex ordering
// and exact on bipartite graphs. The class count is not guaranteed minimal.
Coloring heuristic_coloring(const Graph& g);

// Checks that the classes partition V and are independent; returns the
// nonempty classes with vertices sorted.
std::vector<std::vector<VertexId>> validate_coloring(const Graph& g,
                                                     const Coloring& coloring);

// Requires at least four nonempty classes and a dual certifying the
// weights. Ties between equal-weight classes break on the smallest
// contained vertex id.
AuxTuple build_aux(const Graph& g, const DualSolution& dual,
                   const Coloring& coloring);

// Repeatedly shifts dual mass around the 4-cycle formed by a positive
// E[S'] edge and the heavy pair, zeroing one of the two per step. Ends with
// y'(E[S']) * y'(v_{k-1}, v_k) = 0, which forces alpha <= 1 - 4/k.
RotationResult rotate_duals(const AuxTuple& aux);

// Full application: color, bipartize with the k-2 lightest classes, rotate
// duals on the auxiliary complete graph, and report the valid alpha with
// its worst-case bound of at most 2 - 2/k.
ColoringPipelineResult coloring_pipeline(
    const Graph& g, const std::optional<Coloring>& coloring = {});

}  // namespace vcb
