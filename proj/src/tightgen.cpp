#include "vcb/tightgen.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "vcb/error.hpp"

namespace vcb {

namespace {

// Rotates a validated cycle so that vp comes first.
std::vector<VertexId> rotate_to(std::span<const VertexId> cycle, VertexId vp) {
  std::vector<VertexId> out(cycle.begin(), cycle.end());
  const auto at = std::find(out.begin(), out.end(), vp);
  std::rotate(out.begin(), at, out.end());
  return out;
}

void validate_shortest_odd_cycle(const Graph& g, VertexId vp,
                                 std::span<const VertexId> cycle) {
  if (!g.has_vertex(vp)) fail(Errc::InvalidCycle, "unknown vertex vp");
  if (!is_cycle_of(g, cycle)) fail(Errc::InvalidCycle, "not a cycle of the graph");
  if (cycle.size() % 2 == 0) fail(Errc::InvalidCycle, "cycle has even length");
  if (std::find(cycle.begin(), cycle.end(), vp) == cycle.end())
    fail(Errc::InvalidCycle, "cycle does not contain vp");
  const auto girth = odd_girth(g);
  if (!girth || static_cast<int>(cycle.size()) != girth->length)
    fail(Errc::InvalidCycle, "cycle is not a shortest odd cycle");
}

// Smallest edge id joining u and v.
EdgeId edge_between(const Graph& g, VertexId u, VertexId v) {
  EdgeId found = -1;
  for (const auto& [e, nb] : g.neighbors(u)) {
    if (nb == v && (found == -1 || e < found)) found = e;
  }
  return found;
}

// The alternating cycle dual: 1/rho on both edges at the first vertex,
// then 0 and 1/rho alternating along the cycle.
std::vector<Rational> cycle_dual(const Graph& g,
                                 std::span<const VertexId> rotated) {
  const int len = static_cast<int>(rotated.size());
  const int rho = (len + 1) / 2;
  std::vector<Rational> values(g.edge_count(), 0);
  for (int i = 0; i < len; ++i) {
    if (i % 2 != 0) continue;
    const EdgeId e = edge_between(g, rotated[i], rotated[(i + 1) % len]);
    values[e] = Rational(1, rho);
  }
  return values;
}

Graph weights_from_dual(const Graph& g, const std::vector<Rational>& y) {
  Graph out = g;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Rational at_v = 0;
    for (const auto& [e, nb] : g.neighbors(v)) at_v += y[e];
    out.set_weight(v, at_v);
  }
  return out;
}

}  // namespace

WeightedInstance basic_weight(const Graph& g, VertexId vp,
                              std::span<const VertexId> cycle) {
  validate_shortest_odd_cycle(g, vp, cycle);
  const auto rotated = rotate_to(cycle, vp);
  const auto y = cycle_dual(g, rotated);
  return WeightedInstance{weights_from_dual(g, y), make_dual(g, y)};
}

WeightedInstance convex_weight(const Graph& g, VertexId vp,
                               std::span<const CycleWeight> combination) {
  if (combination.empty())
    fail(Errc::InvalidCombination, "empty convex combination");
  Rational sum = 0;
  for (const auto& [cycle, lambda] : combination) {
    if (lambda < 0) fail(Errc::InvalidCombination, "negative coefficient");
    sum += lambda;
    validate_shortest_odd_cycle(g, vp, cycle);
  }
  if (sum != 1) fail(Errc::InvalidCombination, "coefficients must sum to one");

  std::vector<Rational> y(g.edge_count(), 0);
  for (const auto& [cycle, lambda] : combination) {
    const auto part = cycle_dual(g, rotate_to(cycle, vp));
    for (EdgeId e = 0; e < g.edge_count(); ++e) y[e] += lambda * part[e];
  }
  return WeightedInstance{weights_from_dual(g, y), make_dual(g, y)};
}

WeightedInstance lifted_dual_weight(const Graph& g,
                                    std::span<const VertexId> indep_set,
                                    std::span<const VertexId> contracted_cycle) {
  const auto set = canonical_set(g, indep_set);
  if (set.empty()) fail(Errc::InvalidSet, "independent set is empty");
  if (!is_independent_set(g, set))
    fail(Errc::NotIndependent, "set contains an edge");
  {
    const auto rest = remove_vertices(g, set);
    if (!check_bipartite(rest.graph).ok())
      fail(Errc::NotBipartizing, "set does not bipartize the graph");
  }

  const auto ct = contract(g, set);
  validate_shortest_odd_cycle(ct.graph, ct.contracted, contracted_cycle);
  const auto y_contracted =
      cycle_dual(ct.graph, rotate_to(contracted_cycle, ct.contracted));

  // The independent set keeps the edge sets in bijection, so the dual pulls
  // back edge by edge.
  std::vector<Rational> y(g.edge_count(), 0);
  for (EdgeId e = 0; e < ct.graph.edge_count(); ++e) {
    y[ct.parent_edge[e]] = y_contracted[e];
  }
  return WeightedInstance{weights_from_dual(g, y), make_dual(g, y)};
}

TightInstance gen_alpha_rho(const Rational& alpha, int rho) {
  if (alpha < 0 || alpha > 1) fail(Errc::InvalidParams, "alpha outside [0, 1]");
  if (rho < 2) fail(Errc::InvalidParams, "rho must be at least 2");

  // Vertices 0,1,2 form the triangle replacing the distinguished node; the
  // former cycle neighbours attach to the endpoints of the alpha-edge (0,1).
  const int path_len = 2 * rho - 2;
  Graph g(3 + path_len, 0);
  const Rational step = (1 - alpha) / rho;
  std::vector<Rational> y;
  const auto wire = [&](VertexId u, VertexId v, const Rational& value) {
    g.add_edge(u, v);
    y.push_back(value);
  };
  wire(0, 1, alpha);
  wire(1, 2, 0);
  wire(2, 0, 0);
  wire(0, 3, step);
  for (int i = 1; i <= path_len - 1; ++i) {
    wire(2 + i, 3 + i, i % 2 == 0 ? step : Rational(0));
  }
  wire(2 + path_len, 1, step);

  const Rational expected = (1 + Rational(1, rho)) * (1 - alpha) + 2 * alpha;
  return TightInstance{weights_from_dual(g, y), make_dual(g, y), {0, 1, 2},
                       expected};
}

TightInstance gen_alpha_bipartite(const Rational& alpha, int cycle_len) {
  if (alpha < 0 || alpha > 1) fail(Errc::InvalidParams, "alpha outside [0, 1]");
  if (cycle_len % 2 == 0 || cycle_len < 5)
    fail(Errc::InvalidParams, "cycle length must be odd and at least 5");

  Graph g = Graph::cycle(cycle_len, 0);
  const int mass_edges = (cycle_len - 1) / 2;
  const Rational step = (1 - alpha) / mass_edges;
  std::vector<Rational> y(cycle_len, 0);
  y[0] = alpha;                       // the S-edge (0, 1)
  y[cycle_len - 1] = 0;               // forced zero edge at vertex 0
  for (int i = 1; i <= cycle_len - 2; ++i) {
    y[i] = (i % 2 == 1) ? step : Rational(0);
  }
  return TightInstance{weights_from_dual(g, y), make_dual(g, y), {0, 1},
                       1 + alpha};
}

CycleEnumeration shortest_odd_cycles(const Graph& g, VertexId vp, int limit) {
  if (!g.has_vertex(vp)) fail(Errc::InvalidParams, "unknown vertex vp");
  if (limit < 1) fail(Errc::InvalidParams, "limit must be positive");
  const auto girth = odd_girth(g);
  if (!girth) fail(Errc::NoOddCycle, "graph is bipartite");
  const int target = girth->length;
  const int n = g.vertex_count();

  // Double-cover distances from vp: dist[2v + parity] is the shortest walk
  // from vp to v whose length has that parity.
  std::vector<int> dist(2 * n, -1);
  dist[2 * vp] = 0;
  std::deque<int> queue{2 * vp};
  while (!queue.empty()) {
    const int state = queue.front();
    queue.pop_front();
    for (const auto& [e, nb] : g.neighbors(state / 2)) {
      const int next = 2 * nb + 1 - state % 2;
      if (dist[next] == -1) {
        dist[next] = dist[state] + 1;
        queue.push_back(next);
      }
    }
  }

  std::vector<std::vector<VertexId>> sorted_adj(n);
  for (VertexId v = 0; v < n; ++v) {
    for (const auto& [e, nb] : g.neighbors(v)) sorted_adj[v].push_back(nb);
    std::sort(sorted_adj[v].begin(), sorted_adj[v].end());
    sorted_adj[v].erase(
        std::unique(sorted_adj[v].begin(), sorted_adj[v].end()),
        sorted_adj[v].end());
  }

  std::set<std::vector<VertexId>> found;
  bool truncated = false;
  std::vector<VertexId> path{vp};
  std::vector<bool> on_path(n, false);
  on_path[vp] = true;

  const auto canonical = [&](const std::vector<VertexId>& cycle) {
    std::vector<VertexId> reversed{cycle.front()};
    reversed.insert(reversed.end(), cycle.rbegin(), cycle.rend() - 1);
    return std::min(cycle, reversed);
  };

  // Depth-first search pruned by the parity distances: a partial path can
  // only close into a shortest odd cycle if the remaining budget admits a
  // walk of matching parity back to vp.
  const auto dfs = [&](auto&& self, VertexId u) -> bool {
    const int used = static_cast<int>(path.size()) - 1;
    for (VertexId nb : sorted_adj[u]) {
      if (nb == vp && used + 1 == target) {
        if (static_cast<int>(found.size()) == limit) {
          if (!found.contains(canonical(path))) {
            truncated = true;
            return false;
          }
          continue;
        }
        found.insert(canonical(path));
        continue;
      }
      if (on_path[nb] || used + 1 >= target) continue;
      const int remaining = target - used - 1;
      const int needed = dist[2 * nb + remaining % 2];
      if (needed == -1 || needed > remaining) continue;
      path.push_back(nb);
      on_path[nb] = true;
      const bool keep_going = self(self, nb);
      on_path[nb] = false;
      path.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  dfs(dfs, vp);

  CycleEnumeration out;
  out.cycles.assign(found.begin(), found.end());
  out.truncated = truncated;
  return out;
}

}  // namespace vcb
