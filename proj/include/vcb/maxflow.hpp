#pragma once

#include <vector>

#include "vcb/rational.hpp"

namespace vcb {

// Dinic max-flow over arbitrary-precision integer capacities. Rational
// capacities are handled by callers scaling to a common denominator, so the
// algorithm terminates with an exact optimum. Arc order is the insertion
// order, which makes the final flow and the min cut deterministic.
class MaxFlow {
 public:
  explicit MaxFlow(int node_count);

  // Adds a directed arc and returns its id.
  int add_arc(int from, int to, Integer capacity);

  Integer run(int source, int sink);

  const Integer& flow_on(int arc) const;

  // Nodes reachable from the source in the residual network; only valid
  // after run(). This is the inclusion-minimal source side of a min cut.
  std::vector<bool> source_side(int source) const;

 private:
  struct Arc {
    int to;
    Integer capacity;  // residual
    int twin;
  };

  bool build_levels(int source, int sink);
  Integer push(int node, int sink, Integer limit);

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
  std::vector<Integer> original_;
};

}  // namespace vcb
