#include "vcb/oracle.hpp"

#include <algorithm>
#include <optional>

#include "vcb/error.hpp"

namespace vcb {

namespace {

struct CoverSearch {
  const Graph& g;
  std::vector<bool> chosen;
  Rational weight = 0;
  std::optional<BruteCover> best;

  explicit CoverSearch(const Graph& graph)
      : g(graph), chosen(graph.vertex_count(), false) {}

  EdgeId first_uncovered() const {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto [a, b] = g.ends(e);
      if (!chosen[a] && !chosen[b]) return e;
    }
    return -1;
  }

  void record() {
    std::vector<VertexId> cover;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (chosen[v]) cover.push_back(v);
    }
    if (!best || weight < best->weight ||
        (weight == best->weight &&
         std::lexicographical_compare(cover.begin(), cover.end(),
                                      best->cover.begin(), best->cover.end()))) {
      best = BruteCover{std::move(cover), weight};
    }
  }

  void run() {
    if (best && weight > best->weight) return;
    const EdgeId e = first_uncovered();
    if (e == -1) {
      record();
      return;
    }
    const auto [a, b] = g.ends(e);
    for (VertexId pick : {a, b}) {
      chosen[pick] = true;
      weight += g.weight(pick);
      run();
      weight -= g.weight(pick);
      chosen[pick] = false;
    }
  }
};

struct LpEnum {
  const Graph& g;
  std::vector<std::vector<VertexId>> lower;  // neighbors with smaller id
  std::vector<Rational> values;
  std::optional<Rational> best;

  explicit LpEnum(const Graph& graph)
      : g(graph), lower(graph.vertex_count()), values(graph.vertex_count(), 0) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto [a, b] = g.ends(e);
      if (a > b) std::swap(a, b);
      lower[b].push_back(a);
    }
  }

  void run(VertexId v, const Rational& partial) {
    if (best && partial >= *best) return;
    if (v == g.vertex_count()) {
      best = partial;
      return;
    }
    static const Rational kLevels[3] = {Rational(0), Rational(1, 2), Rational(1)};
    for (const Rational& level : kLevels) {
      bool feasible = true;
      for (VertexId u : lower[v]) {
        if (values[u] + level < 1) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      values[v] = level;
      run(v + 1, partial + g.weight(v) * level);
    }
    values[v] = 0;
  }
};

// Dense simplex tableau maximizing 1^T z subject to Az <= 1, z >= 0, with
// Bland's rule for exact termination on rationals.
Rational packing_optimum(const std::vector<std::vector<Rational>>& rows, int vars) {
  const int m = static_cast<int>(rows.size());
  const int total = vars + m;
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(total + 1, 0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < vars; ++j) t[i][j] = rows[i][j];
    t[i][vars + i] = 1;
    t[i][total] = 1;  // right-hand side
  }
  for (int j = 0; j < vars; ++j) t[m][j] = -1;  // maximize sum of z

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = vars + i;

  while (true) {
    int entering = -1;
    for (int j = 0; j < total; ++j) {
      if (t[m][j] < 0) {
        entering = j;
        break;
      }
    }
    if (entering == -1) break;

    int leaving = -1;
    Rational best_ratio;
    for (int i = 0; i < m; ++i) {
      if (t[i][entering] <= 0) continue;
      const Rational ratio = t[i][total] / t[i][entering];
      if (leaving == -1 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == -1) fail(Errc::InvalidParams, "unbounded packing LP");

    const Rational pivot = t[leaving][entering];
    for (int j = 0; j <= total; ++j) t[leaving][j] /= pivot;
    for (int i = 0; i <= m; ++i) {
      if (i == leaving || t[i][entering] == 0) continue;
      const Rational factor = t[i][entering];
      for (int j = 0; j <= total; ++j) t[i][j] -= factor * t[leaving][j];
    }
    basis[leaving] = entering;
  }
  return t[m][total];
}

}  // namespace

BruteCover brute_opt_vc(const Graph& g, const OracleBudget& budget) {
  if (g.vertex_count() > budget.max_vertices_exact)
    fail(Errc::TooLarge, "graph exceeds the exact-cover budget");
  CoverSearch search(g);
  search.run();
  return *search.best;
}

Rational brute_lp(const Graph& g, const OracleBudget& budget) {
  if (g.vertex_count() > budget.max_vertices_lp_enum)
    fail(Errc::TooLarge, "graph exceeds the LP enumeration budget");
  LpEnum enumeration(g);
  enumeration.run(0, 0);
  return *enumeration.best;
}

std::vector<std::vector<VertexId>> maximal_independent_sets(const Graph& g,
                                                            int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices)
    fail(Errc::TooLarge, "graph exceeds the independent-set enumeration budget");
  std::vector<unsigned> adjacency(n, 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.ends(e);
    adjacency[a] |= 1u << b;
    adjacency[b] |= 1u << a;
  }
  std::vector<std::vector<VertexId>> sets;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (int v = 0; v < n && independent; ++v) {
      if ((mask >> v & 1u) && (adjacency[v] & mask)) independent = false;
    }
    if (!independent) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (!(mask >> v & 1u) && !(adjacency[v] & mask)) maximal = false;
    }
    if (!maximal) continue;
    std::vector<VertexId> set;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1u) set.push_back(v);
    }
    sets.push_back(std::move(set));
  }
  return sets;
}

Rational brute_fcn(const Graph& g, const OracleBudget& budget) {
  const int n = g.vertex_count();
  if (n > budget.max_vertices_fcn)
    fail(Errc::TooLarge, "graph exceeds the fractional-coloring budget");
  if (n == 0) return 0;
  const auto sets = maximal_independent_sets(g, budget.max_vertices_fcn);
  std::vector<std::vector<Rational>> rows;
  rows.reserve(sets.size());
  for (const auto& set : sets) {
    std::vector<Rational> row(n, 0);
    for (VertexId v : set) row[v] = 1;
    rows.push_back(std::move(row));
  }
  return packing_optimum(rows, n);
}

}  // namespace vcb
