#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vcb/oracle.hpp"
#include "vcb/relax.hpp"

namespace vcb {

// BFS distance classes of the bipartite remainder, measured from the A-side
// neighborhood of the contracted vertex. Even-indexed layers lie on side A,
// odd-indexed on side B; dummy components (those the contracted vertex does
// not touch) form the final two layers. Vertex ids refer to the contracted
// graph.
struct LayerDecomposition {
  std::vector<std::vector<VertexId>> layers;
  std::vector<bool> side_is_a;        // per layer; equals (index even)
  std::optional<int> dummy_start;     // index of the first dummy layer
  std::vector<VertexId> sources;      // N_A(v^S)
};

// Feasible covers of G \ S whose surplus edge sets E_U are pairwise
// disjoint. Vertices and edges are in the parent graph's id space.
struct CoverFamily {
  std::vector<std::vector<VertexId>> covers;
  std::vector<std::vector<EdgeId>> marked_edges;
};

struct RoundReport {
  std::vector<VertexId> cover;
  Rational cover_weight;
  Rational weight_one;   // w(V_1)
  Rational weight_s;     // w(S)
  Rational weight_rest;  // w(W), the bipartite remainder cover
  Rational lp_value;
  Rational opt_value;    // brute OPT within budget, LP value otherwise
  bool opt_exact = false;
  Rational achieved;     // cover_weight / opt_value
};

// Exact minimum-weight vertex cover of a bipartite graph via max-flow/
// min-cut; the weight equals the LP optimum on such graphs.
std::vector<VertexId> bipartite_min_cover(const Graph& g, const Bipartition& bip);

// The round-and-bipartize rounding: solve the relaxation, keep the ones,
// take S, and solve the bipartite remainder of the half graph exactly.
// Fails with NotBipartizing when removing S leaves the half graph odd.
RoundReport round_and_bipartize(const Graph& g, std::span<const VertexId> s,
                                const OracleBudget& budget = {});

// Greedy repair: while the remainder is odd, add the smallest-id vertex of
// a witness odd cycle. Idempotent on already-bipartizing sets.
std::vector<VertexId> extend_to_bipartizing(const Graph& g,
                                            std::span<const VertexId> s);

LayerDecomposition layer_decomposition(const ContractedGraph& contracted);

// The rho feasible covers of G \ S: both bipartition sides plus, for each
// j in [rho-2], the cover starting at the double layer L_{2j-1}, L_{2j}
// and alternating outward. Their marked edge sets are pairwise disjoint.
CoverFamily edge_separate_covers(const ContractedGraph& contracted,
                                 const LayerDecomposition& layers);

}  // namespace vcb
