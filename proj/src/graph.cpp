#include "vcb/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "vcb/error.hpp"

namespace vcb {

Graph::Graph(int vertex_count, const Rational& weight) {
  if (vertex_count < 0) fail(Errc::InvalidParams, "negative vertex count");
  if (weight < 0) fail(Errc::InvalidParams, "negative vertex weight");
  weights_.assign(vertex_count, weight);
  adj_.resize(vertex_count);
}

VertexId Graph::add_vertex(const Rational& weight) {
  if (weight < 0) fail(Errc::InvalidParams, "negative vertex weight");
  weights_.push_back(weight);
  adj_.emplace_back();
  return static_cast<VertexId>(weights_.size()) - 1;
}

EdgeId Graph::add_edge(VertexId u, VertexId v) {
  if (!has_vertex(u) || !has_vertex(v))
    fail(Errc::InvalidParams, "edge endpoint out of range");
  if (u == v) fail(Errc::InvalidParams, "self-loops are not allowed");
  const EdgeId e = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, v});
  adj_[u].push_back({e, v});
  adj_[v].push_back({e, u});
  return e;
}

const Rational& Graph::weight(VertexId v) const {
  if (!has_vertex(v)) fail(Errc::InvalidParams, "vertex out of range");
  return weights_[v];
}

void Graph::set_weight(VertexId v, const Rational& w) {
  if (!has_vertex(v)) fail(Errc::InvalidParams, "vertex out of range");
  if (w < 0) fail(Errc::InvalidParams, "negative vertex weight");
  weights_[v] = w;
}

EdgeEnds Graph::ends(EdgeId e) const {
  if (e < 0 || e >= edge_count()) fail(Errc::InvalidParams, "edge out of range");
  return edges_[e];
}

std::span<const AdjEntry> Graph::neighbors(VertexId v) const {
  if (!has_vertex(v)) fail(Errc::InvalidParams, "vertex out of range");
  return adj_[v];
}

Rational Graph::total_weight() const {
  Rational sum = 0;
  for (const auto& w : weights_) sum += w;
  return sum;
}

Rational Graph::weight_of(std::span<const VertexId> vertices) const {
  Rational sum = 0;
  for (VertexId v : vertices) sum += weight(v);
  return sum;
}

Graph Graph::cycle(int length, const Rational& weight) {
  if (length < 3) fail(Errc::InvalidParams, "cycle needs at least 3 vertices");
  Graph g(length, weight);
  for (int i = 0; i < length; ++i) g.add_edge(i, (i + 1) % length);
  return g;
}

Graph Graph::path(int length, const Rational& weight) {
  if (length < 1) fail(Errc::InvalidParams, "path needs at least 1 vertex");
  Graph g(length, weight);
  for (int i = 0; i + 1 < length; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::complete(int order, const Rational& weight) {
  if (order < 1) fail(Errc::InvalidParams, "complete graph needs vertices");
  Graph g(order, weight);
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::star(int leaves, const Rational& weight) {
  if (leaves < 0) fail(Errc::InvalidParams, "negative leaf count");
  Graph g(leaves + 1, weight);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

std::vector<bool> make_mask(int n, std::span<const VertexId> s) {
  std::vector<bool> mask(n, false);
  for (VertexId v : s) {
    if (v < 0 || v >= n) fail(Errc::InvalidSet, "vertex out of range");
    mask[v] = true;
  }
  return mask;
}

std::vector<VertexId> canonical_set(const Graph& g, std::span<const VertexId> s) {
  std::vector<VertexId> out;
  out.reserve(s.size());
  for (VertexId v : s) {
    if (!g.has_vertex(v)) fail(Errc::InvalidSet, "unknown vertex in set");
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_independent_set(const Graph& g, std::span<const VertexId> s) {
  const auto mask = make_mask(g.vertex_count(), s);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.ends(e);
    if (mask[a] && mask[b]) return false;
  }
  return true;
}

BipartiteCheck check_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<VertexId> parent(n, -1);
  std::vector<int> depth(n, 0);

  for (VertexId root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop_front();
      for (const auto& [e, v] : g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          // Monochromatic edge: walk both endpoints up to their lowest
          // common BFS ancestor to produce the witness odd cycle.
          std::vector<VertexId> up_u{u}, up_v{v};
          VertexId a = u, b = v;
          while (a != b) {
            a = parent[a];
            b = parent[b];
            up_u.push_back(a);
            up_v.push_back(b);
          }
          // Cycle: LCA down to u, across the edge to v, back up to the
          // child of the LCA.
          std::reverse(up_u.begin(), up_u.end());
          up_v.pop_back();
          up_u.insert(up_u.end(), up_v.begin(), up_v.end());
          return BipartiteCheck{std::nullopt, std::move(up_u)};
        }
      }
    }
  }

  Bipartition bip;
  for (VertexId v = 0; v < n; ++v) {
    (color[v] == 0 ? bip.side_a : bip.side_b).push_back(v);
  }
  return BipartiteCheck{std::move(bip), {}};
}

std::optional<OddCycle> odd_girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  std::vector<VertexId> best_cycle;

  // One BFS per source on the double cover; states are (vertex, parity).
  std::vector<int> dist(2 * n);
  std::vector<int> from(2 * n);
  for (VertexId src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(from.begin(), from.end(), -1);
    const int start = 2 * src;
    const int goal = 2 * src + 1;
    dist[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int state = queue.front();
      queue.pop_front();
      if (dist[state] + 1 >= best) break;  // cannot improve from here
      const VertexId u = state / 2;
      const int parity = state % 2;
      for (const auto& [e, v] : g.neighbors(u)) {
        const int next = 2 * v + (1 - parity);
        if (dist[next] == -1) {
          dist[next] = dist[state] + 1;
          from[next] = state;
          queue.push_back(next);
        }
      }
    }
    if (dist[goal] != -1 && dist[goal] < best) {
      best = dist[goal];
      best_cycle.clear();
      for (int state = goal; state != start; state = from[state]) {
        best_cycle.push_back(state / 2);
      }
      std::reverse(best_cycle.begin(), best_cycle.end());
    }
  }

  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return OddCycle{best, std::move(best_cycle)};
}

ContractedGraph contract(const Graph& g, std::span<const VertexId> s) {
  const auto set = canonical_set(g, s);
  if (set.empty()) fail(Errc::InvalidSet, "contraction set is empty");
  const int n = g.vertex_count();
  const auto mask = make_mask(n, set);

  ContractedGraph out;
  out.image.assign(n, -1);
  VertexId next = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (mask[v]) continue;
    out.image[v] = next++;
    out.origin.push_back(v);
    out.graph.add_vertex(g.weight(v));
  }
  out.contracted = next;
  out.origin.push_back(-1);
  out.graph.add_vertex(g.weight_of(set));
  for (VertexId v : set) out.image[v] = out.contracted;

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.ends(e);
    if (mask[a] && mask[b]) {
      out.dropped_edges.push_back(e);
      continue;
    }
    out.graph.add_edge(out.image[a], out.image[b]);
    out.parent_edge.push_back(e);
  }
  return out;
}

EdgeSplit boundary_and_inside(const Graph& g, std::span<const VertexId> s) {
  const auto set = canonical_set(g, s);
  const auto mask = make_mask(g.vertex_count(), set);
  EdgeSplit split;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.ends(e);
    const int hits = int(mask[a]) + int(mask[b]);
    if (hits == 2) split.inside.push_back(e);
    else if (hits == 1) split.crossing.push_back(e);
  }
  return split;
}

Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> keep) {
  const auto set = canonical_set(g, keep);
  const int n = g.vertex_count();
  Subgraph out;
  out.image.assign(n, -1);
  for (VertexId v : set) {
    out.image[v] = static_cast<VertexId>(out.origin.size());
    out.origin.push_back(v);
    out.graph.add_vertex(g.weight(v));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.ends(e);
    if (out.image[a] == -1 || out.image[b] == -1) continue;
    out.graph.add_edge(out.image[a], out.image[b]);
    out.edge_origin.push_back(e);
  }
  return out;
}

Subgraph remove_vertices(const Graph& g, std::span<const VertexId> drop) {
  const auto mask = make_mask(g.vertex_count(), canonical_set(g, drop));
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!mask[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<VertexId>> components;
  for (VertexId root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::vector<VertexId> comp{root};
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop_front();
      for (const auto& [e, v] : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          comp.push_back(v);
          queue.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool is_cycle_of(const Graph& g, std::span<const VertexId> cycle) {
  const int len = static_cast<int>(cycle.size());
  if (len < 3) return false;
  std::vector<VertexId> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  for (int i = 0; i < len; ++i) {
    const VertexId u = cycle[i];
    const VertexId v = cycle[(i + 1) % len];
    if (!g.has_vertex(u) || !g.has_vertex(v)) return false;
    bool adjacent = false;
    for (const auto& [e, nb] : g.neighbors(u)) {
      if (nb == v) {
        adjacent = true;
        break;
      }
    }
    if (!adjacent) return false;
  }
  return true;
}

}  // namespace vcb
