#include "vcb/coloring.hpp"

#include <algorithm>
#include <set>

#include "vcb/error.hpp"

namespace vcb {

std::vector<std::vector<VertexId>> validate_coloring(const Graph& g,
                                                     const Coloring& coloring) {
  std::vector<int> class_of(g.vertex_count(), -1);
  std::vector<std::vector<VertexId>> classes;
  for (const auto& cls : coloring.classes) {
    if (cls.empty()) continue;
    auto sorted = canonical_set(g, cls);
    if (sorted.size() != cls.size())
      fail(Errc::InvalidColoring, "duplicate vertex inside a class");
    for (VertexId v : sorted) {
      if (class_of[v] != -1)
        fail(Errc::InvalidColoring, "vertex in two color classes");
      class_of[v] = static_cast<int>(classes.size());
    }
    classes.push_back(std::move(sorted));
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (class_of[v] == -1)
      fail(Errc::InvalidColoring, "vertex missing from the coloring");
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.ends(e);
    if (class_of[a] == class_of[b])
      fail(Errc::InvalidColoring, "edge inside a color class");
  }
  return classes;
}

Coloring heuristic_coloring(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<std::set<int>> neighbor_colors(n);

  for (int round = 0; round < n; ++round) {
    VertexId pick = -1;
    for (VertexId v = 0; v < n; ++v) {
      if (color[v] != -1) continue;
      if (pick == -1) {
        pick = v;
        continue;
      }
      const auto sat_v = neighbor_colors[v].size();
      const auto sat_p = neighbor_colors[pick].size();
      if (sat_v > sat_p ||
          (sat_v == sat_p && g.degree(v) > g.degree(pick))) {
        pick = v;
      }
    }
    int c = 0;
    while (neighbor_colors[pick].contains(c)) ++c;
    color[pick] = c;
    for (const auto& [e, nb] : g.neighbors(pick)) {
      neighbor_colors[nb].insert(c);
    }
  }

  Coloring out;
  const int k = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  out.classes.assign(k, {});
  for (VertexId v = 0; v < n; ++v) out.classes[color[v]].push_back(v);
  return out;
}

AuxTuple build_aux(const Graph& g, const DualSolution& dual,
                   const Coloring& coloring) {
  if (static_cast<int>(dual.values.size()) != g.edge_count())
    fail(Errc::InvalidParams, "dual size does not match edge count");
  if (dual.total != 1)
    fail(Errc::UnnormalizedDual, "dual values must sum to one");
  if (!dual_is_tight(g, dual))
    fail(Errc::NotInQW, "dual does not certify the weights");

  auto classes = validate_coloring(g, coloring);
  const int k = static_cast<int>(classes.size());
  if (k < 4) fail(Errc::TooFewColors, "at least four color classes required");

  // Sort by class weight, ties by smallest contained vertex id.
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  std::vector<Rational> class_weight(k);
  for (int i = 0; i < k; ++i) class_weight[i] = g.weight_of(classes[i]);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (class_weight[a] != class_weight[b])
      return class_weight[a] < class_weight[b];
    return classes[a].front() < classes[b].front();
  });

  AuxTuple aux;
  aux.k_graph = Graph(k, 0);
  std::vector<int> position(k);
  for (int i = 0; i < k; ++i) {
    position[order[i]] = i;
    aux.k_graph.set_weight(i, class_weight[order[i]]);
    aux.sorted_classes.push_back(classes[order[i]]);
  }

  std::vector<std::vector<EdgeId>> pair_edge(k, std::vector<EdgeId>(k, -1));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      pair_edge[i][j] = pair_edge[j][i] = aux.k_graph.add_edge(i, j);
    }
  }

  std::vector<int> class_of(g.vertex_count());
  for (int i = 0; i < k; ++i) {
    for (VertexId v : aux.sorted_classes[i]) class_of[v] = i;
  }
  std::vector<Rational> values(aux.k_graph.edge_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.ends(e);
    values[pair_edge[class_of[a]][class_of[b]]] += dual.values[e];
  }
  aux.k_dual = make_dual(aux.k_graph, std::move(values));

  for (int i = 0; i < k - 2; ++i) aux.s_prime.push_back(i);
  return aux;
}

RotationResult rotate_duals(const AuxTuple& aux) {
  RotationResult out{aux, 0, {}};
  Graph& kg = out.aux.k_graph;
  auto& y = out.aux.k_dual.values;
  const int k = kg.vertex_count();
  if (k < 4) fail(Errc::TooFewColors, "auxiliary tuple needs k >= 4");

  std::vector<std::vector<EdgeId>> pair_edge(k, std::vector<EdgeId>(k, -1));
  for (EdgeId e = 0; e < kg.edge_count(); ++e) {
    const auto [a, b] = kg.ends(e);
    pair_edge[a][b] = pair_edge[b][a] = e;
  }
  const EdgeId heavy = pair_edge[k - 2][k - 1];

  const auto inside_positive = [&]() -> std::optional<std::pair<int, int>> {
    for (int i = 0; i + 1 <= k - 3; ++i) {
      for (int j = i + 1; j <= k - 3; ++j) {
        if (y[pair_edge[i][j]] > 0) return std::make_pair(i, j);
      }
    }
    return std::nullopt;
  };

  while (y[heavy] > 0) {
    const auto inside = inside_positive();
    if (!inside) break;
    const auto [i, j] = *inside;
    const EdgeId low = pair_edge[i][j];
    const Rational epsilon = std::min(y[low], y[heavy]);
    y[low] -= epsilon;
    y[heavy] -= epsilon;
    y[pair_edge[j][k - 2]] += epsilon;
    y[pair_edge[k - 1][i]] += epsilon;
    out.steps.push_back(
        {low, heavy, pair_edge[j][k - 2], pair_edge[k - 1][i], epsilon});
  }

  out.alpha = 0;
  for (int i = 0; i + 1 <= k - 3; ++i) {
    for (int j = i + 1; j <= k - 3; ++j) out.alpha += y[pair_edge[i][j]];
  }
  return out;
}

ColoringPipelineResult coloring_pipeline(const Graph& g,
                                         const std::optional<Coloring>& coloring) {
  const Graph gn = normalize(g);
  const auto dual = recover_dual(gn);
  if (!dual) fail(Errc::NotInQW, "weights are not certified by any dual");

  const Coloring used = coloring ? *coloring : heuristic_coloring(gn);
  const AuxTuple aux = build_aux(gn, *dual, used);
  auto rotation = rotate_duals(aux);

  ColoringPipelineResult out;
  out.k = aux.k_graph.vertex_count();
  std::vector<VertexId> s;
  for (int i = 0; i < out.k - 2; ++i) {
    s.insert(s.end(), rotation.aux.sorted_classes[i].begin(),
             rotation.aux.sorted_classes[i].end());
  }
  std::sort(s.begin(), s.end());
  out.s = std::move(s);
  out.valid_alpha = rotation.alpha;
  out.worst_case_bound =
      (1 + Rational(1, 2)) * (1 - rotation.alpha) + 2 * rotation.alpha;
  out.aux = std::move(rotation.aux);
  out.steps = std::move(rotation.steps);
  return out;
}

}  // namespace vcb
