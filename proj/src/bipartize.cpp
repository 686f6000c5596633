#include "vcb/bipartize.hpp"

#include <algorithm>
#include <deque>

#include "vcb/error.hpp"
#include "vcb/maxflow.hpp"

namespace vcb {

namespace {

// side[v] = 0 for A, 1 for B, -1 if v is not in the bipartition.
std::vector<int> side_lookup(const Graph& g, const Bipartition& bip) {
  std::vector<int> side(g.vertex_count(), -1);
  for (VertexId v : bip.side_a) {
    if (!g.has_vertex(v) || side[v] != -1)
      fail(Errc::NotBipartite, "invalid bipartition side A");
    side[v] = 0;
  }
  for (VertexId v : bip.side_b) {
    if (!g.has_vertex(v) || side[v] != -1)
      fail(Errc::NotBipartite, "invalid bipartition side B");
    side[v] = 1;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (side[v] == -1) fail(Errc::NotBipartite, "bipartition does not cover V");
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.ends(e);
    if (side[a] == side[b])
      fail(Errc::NotBipartite, "edge inside one bipartition side");
  }
  return side;
}

}  // namespace

std::vector<VertexId> bipartite_min_cover(const Graph& g, const Bipartition& bip) {
  const auto side = side_lookup(g, bip);
  const int n = g.vertex_count();

  Integer scale = 1;
  for (VertexId v = 0; v < n; ++v) {
    scale = boost::multiprecision::lcm(scale, denominator(g.weight(v)));
  }
  const auto cap_of = [&](VertexId v) {
    return numerator(Rational(g.weight(v) * scale));
  };

  Integer inf = 1;
  for (VertexId v = 0; v < n; ++v) inf += cap_of(v);

  // Nodes: 0 source, 1+v vertices, n+1 sink.
  MaxFlow flow(n + 2);
  const int source = 0;
  const int sink = n + 1;
  for (VertexId v = 0; v < n; ++v) {
    if (side[v] == 0) flow.add_arc(source, 1 + v, cap_of(v));
    else flow.add_arc(1 + v, sink, cap_of(v));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.ends(e);
    if (side[a] == 1) std::swap(a, b);
    flow.add_arc(1 + a, 1 + b, inf);
  }
  flow.run(source, sink);

  const auto reach = flow.source_side(source);
  std::vector<VertexId> cover;
  for (VertexId v = 0; v < n; ++v) {
    const bool in_cover = (side[v] == 0) ? !reach[1 + v] : reach[1 + v];
    if (in_cover) cover.push_back(v);
  }
  return cover;
}

RoundReport round_and_bipartize(const Graph& g, std::span<const VertexId> s,
                                const OracleBudget& budget) {
  const auto set = canonical_set(g, s);
  const auto x = solve_lp(g);
  const auto nt = nt_decompose(g, x);

  // Restrict S to the half class and remove it from the half subgraph.
  std::vector<VertexId> s_local;
  const auto s_mask = make_mask(g.vertex_count(), set);
  for (VertexId v : nt.half) {
    if (s_mask[v]) s_local.push_back(nt.half_subgraph.image[v]);
  }
  const Subgraph remainder = remove_vertices(nt.half_subgraph.graph, s_local);
  const auto check = check_bipartite(remainder.graph);
  if (!check.ok())
    fail(Errc::NotBipartizing, "removing S leaves the half graph non-bipartite");

  const auto w_local = bipartite_min_cover(remainder.graph, *check.bipartition);

  RoundReport report;
  std::vector<bool> in_cover(g.vertex_count(), false);
  for (VertexId v : nt.one) in_cover[v] = true;
  for (VertexId v : set) in_cover[v] = true;
  report.weight_rest = 0;
  for (VertexId v : w_local) {
    const VertexId parent = nt.half_subgraph.origin[remainder.origin[v]];
    in_cover[parent] = true;
    report.weight_rest += g.weight(parent);
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in_cover[v]) report.cover.push_back(v);
  }
  report.cover_weight = g.weight_of(report.cover);
  report.weight_one = g.weight_of(nt.one);
  report.weight_s = g.weight_of(set);
  report.lp_value = x.objective;

  if (g.vertex_count() <= budget.max_vertices_exact) {
    report.opt_value = brute_opt_vc(g, budget).weight;
    report.opt_exact = true;
  } else {
    report.opt_value = x.objective;
    report.opt_exact = false;
  }

  if (report.opt_value == 0) {
    if (report.cover_weight != 0)
      fail(Errc::DegenerateWeights, "optimum weight is zero");
    report.achieved = 1;
  } else {
    report.achieved = report.cover_weight / report.opt_value;
  }
  return report;
}

std::vector<VertexId> extend_to_bipartizing(const Graph& g,
                                            std::span<const VertexId> s) {
  auto set = canonical_set(g, s);
  while (true) {
    const Subgraph rest = remove_vertices(g, set);
    const auto check = check_bipartite(rest.graph);
    if (check.ok()) return set;
    VertexId pick = g.vertex_count();
    for (VertexId v : check.odd_cycle) pick = std::min(pick, rest.origin[v]);
    set.insert(std::lower_bound(set.begin(), set.end(), pick), pick);
  }
}

LayerDecomposition layer_decomposition(const ContractedGraph& contracted) {
  const Graph& cg = contracted.graph;
  const VertexId vp = contracted.contracted;
  const std::vector<VertexId> drop{vp};
  const Subgraph rest = remove_vertices(cg, drop);
  const auto check = check_bipartite(rest.graph);
  if (!check.ok())
    fail(Errc::NotBipartizing, "graph minus the contracted vertex is odd");

  const int m = rest.graph.vertex_count();
  std::vector<int> side(m, 0);
  for (VertexId v : check.bipartition->side_b) side[v] = 1;

  std::vector<bool> is_neighbor(m, false);
  for (const auto& [e, nb] : cg.neighbors(vp)) {
    is_neighbor[rest.image[nb]] = true;
  }

  // Components that see v^S on one side only are flipped so that side is A.
  const auto components = connected_components(rest.graph);
  std::vector<bool> dummy(m, false);
  for (const auto& comp : components) {
    bool sees_a = false, sees_b = false;
    for (VertexId v : comp) {
      if (!is_neighbor[v]) continue;
      (side[v] == 0 ? sees_a : sees_b) = true;
    }
    if (!sees_a && !sees_b) {
      for (VertexId v : comp) dummy[v] = true;
    } else if (!sees_a) {
      for (VertexId v : comp) side[v] = 1 - side[v];
    }
  }

  LayerDecomposition out;
  std::vector<int> dist(m, -1);
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < m; ++v) {
    if (is_neighbor[v] && side[v] == 0) {
      out.sources.push_back(rest.origin[v]);
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  int max_dist = -1;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    max_dist = std::max(max_dist, dist[u]);
    for (const auto& [e, nb] : rest.graph.neighbors(u)) {
      if (dist[nb] == -1) {
        dist[nb] = dist[u] + 1;
        queue.push_back(nb);
      }
    }
  }

  out.layers.assign(max_dist + 1, {});
  for (VertexId v = 0; v < m; ++v) {
    if (dist[v] >= 0) out.layers[dist[v]].push_back(rest.origin[v]);
  }

  std::vector<VertexId> dummy_a, dummy_b;
  for (VertexId v = 0; v < m; ++v) {
    if (!dummy[v]) continue;
    (side[v] == 0 ? dummy_a : dummy_b).push_back(rest.origin[v]);
  }
  if (!dummy_a.empty() || !dummy_b.empty()) {
    out.dummy_start = max_dist + 1;
    // Order the dummy pair so even layers stay on side A.
    if (max_dist % 2 == 0) {
      out.layers.push_back(std::move(dummy_b));
      out.layers.push_back(std::move(dummy_a));
    } else {
      out.layers.push_back(std::move(dummy_a));
      out.layers.push_back(std::move(dummy_b));
    }
  }
  for (std::size_t i = 0; i < out.layers.size(); ++i) {
    out.side_is_a.push_back(i % 2 == 0);
  }
  return out;
}

CoverFamily edge_separate_covers(const ContractedGraph& contracted,
                                 const LayerDecomposition& layers) {
  const Graph& cg = contracted.graph;
  const VertexId vp = contracted.contracted;
  const auto girth = odd_girth(cg);
  if (!girth)
    fail(Errc::BipartiteContraction, "contracted graph has no odd cycle");
  const int rho = (girth->length + 1) / 2;

  const int layer_count = static_cast<int>(layers.layers.size());

  // Selected layer indices per cover; A and B are the even/odd layers.
  std::vector<std::vector<int>> selections;
  std::vector<int> evens, odds;
  for (int i = 0; i < layer_count; ++i) (i % 2 == 0 ? evens : odds).push_back(i);
  selections.push_back(evens);
  selections.push_back(odds);
  for (int j = 1; j <= rho - 2; ++j) {
    if (2 * j >= layer_count)
      fail(Errc::InvalidParams, "layer decomposition too shallow for rho");
    std::vector<int> sel;
    for (int i = 1; i <= 2 * j - 1; i += 2) sel.push_back(i);
    for (int i = 2 * j; i < layer_count; i += 2) sel.push_back(i);
    selections.push_back(std::move(sel));
  }

  CoverFamily family;
  for (const auto& selection : selections) {
    std::vector<bool> in_cover(cg.vertex_count(), false);
    std::vector<VertexId> cover;
    for (int layer : selection) {
      for (VertexId v : layers.layers[layer]) in_cover[v] = true;
    }
    for (VertexId v = 0; v < cg.vertex_count(); ++v) {
      if (in_cover[v]) cover.push_back(contracted.origin[v]);
    }
    std::sort(cover.begin(), cover.end());

    std::vector<EdgeId> marked;
    for (EdgeId e = 0; e < cg.edge_count(); ++e) {
      const auto [a, b] = cg.ends(e);
      const bool surplus =
          (in_cover[a] && in_cover[b]) ||
          (a == vp && in_cover[b]) || (b == vp && in_cover[a]);
      if (surplus) marked.push_back(contracted.parent_edge[e]);
    }
    family.covers.push_back(std::move(cover));
    family.marked_edges.push_back(std::move(marked));
  }
  return family;
}

}  // namespace vcb
