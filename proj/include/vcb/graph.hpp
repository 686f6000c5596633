#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vcb/rational.hpp"

namespace vcb {

using VertexId = int;
using EdgeId = int;

struct EdgeEnds {
  VertexId a = -1;
  VertexId b = -1;
};

struct AdjEntry {
  EdgeId edge = -1;
  VertexId neighbor = -1;
};

// Vertex-weighted undirected multigraph. Parallel edges are allowed,
// self-loops are not. Vertex and edge ids are dense indices assigned in
// insertion order; every algorithm in the library breaks ties by these ids,
// so results are reproducible. Graphs are treated as immutable once built
// and are safe to share read-only across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count, const Rational& weight = 1);

  VertexId add_vertex(const Rational& weight = 1);
  EdgeId add_edge(VertexId u, VertexId v);

  int vertex_count() const { return static_cast<int>(weights_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_vertex(VertexId v) const {
    return v >= 0 && v < vertex_count();
  }

  const Rational& weight(VertexId v) const;
  void set_weight(VertexId v, const Rational& w);
  EdgeEnds ends(EdgeId e) const;
  std::span<const AdjEntry> neighbors(VertexId v) const;
  int degree(VertexId v) const {
    return static_cast<int>(neighbors(v).size());
  }

  Rational total_weight() const;
  Rational weight_of(std::span<const VertexId> vertices) const;

  static Graph cycle(int length, const Rational& weight = 1);
  static Graph path(int length, const Rational& weight = 1);
  static Graph complete(int order, const Rational& weight = 1);
  static Graph star(int leaves, const Rational& weight = 1);

 private:
  std::vector<Rational> weights_;
  std::vector<EdgeEnds> edges_;
  std::vector<std::vector<AdjEntry>> adj_;
};

// Two-sided split of a bipartite graph; every edge crosses the sides.
struct Bipartition {
  std::vector<VertexId> side_a;
  std::vector<VertexId> side_b;
};

struct BipartiteCheck {
  std::optional<Bipartition> bipartition;
  std::vector<VertexId> odd_cycle;  // witness cycle when not bipartite
  bool ok() const { return bipartition.has_value(); }
};

struct OddCycle {
  int length = 0;
  std::vector<VertexId> vertices;
};

// Induced subgraph plus the maps between its ids and the parent's.
struct Subgraph {
  Graph graph;
  std::vector<VertexId> origin;     // new vertex -> parent vertex
  std::vector<EdgeId> edge_origin;  // new edge -> parent edge
  std::vector<VertexId> image;      // parent vertex -> new vertex, -1 if dropped
};

// Result of merging a vertex set S into the single node `contracted`.
// Parallel edges are preserved; edges inside S are dropped and recorded.
struct ContractedGraph {
  Graph graph;
  VertexId contracted = -1;
  std::vector<VertexId> origin;       // new vertex -> parent vertex, -1 for v^S
  std::vector<VertexId> image;        // parent vertex -> new vertex
  std::vector<EdgeId> parent_edge;    // new edge -> parent edge (injective)
  std::vector<EdgeId> dropped_edges;  // parent edges with both ends in S
};

struct EdgeSplit {
  std::vector<EdgeId> crossing;  // delta(S)
  std::vector<EdgeId> inside;    // E[S]
};

// BFS 2-coloring; roots are the smallest unvisited vertices and land on
// side A. The witness odd cycle is reconstructed from the BFS tree.
BipartiteCheck check_bipartite(const Graph& g);

// Length of the shortest odd cycle together with one witness, or nullopt
// iff the graph is bipartite. Computed as the minimum over vertices v of
// the distance between the two copies of v in the bipartite double cover.
std::optional<OddCycle> odd_girth(const Graph& g);

ContractedGraph contract(const Graph& g, std::span<const VertexId> s);

EdgeSplit boundary_and_inside(const Graph& g, std::span<const VertexId> s);

Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> keep);
Subgraph remove_vertices(const Graph& g, std::span<const VertexId> drop);

// Validates ids against g and returns the set sorted without duplicates.
std::vector<VertexId> canonical_set(const Graph& g, std::span<const VertexId> s);

bool is_independent_set(const Graph& g, std::span<const VertexId> s);

std::vector<bool> make_mask(int n, std::span<const VertexId> s);

std::vector<std::vector<VertexId>> connected_components(const Graph& g);

// True when `cycle` lists the vertices of a simple cycle of g in order.
bool is_cycle_of(const Graph& g, std::span<const VertexId> cycle);

}  // namespace vcb
