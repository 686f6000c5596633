#include "vcb/relax.hpp"

#include <algorithm>
#include <random>

#include "vcb/error.hpp"
#include "vcb/maxflow.hpp"

namespace vcb {

namespace {

Integer common_denominator(const Graph& g) {
  Integer lcm = 1;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    lcm = boost::multiprecision::lcm(lcm, denominator(g.weight(v)));
  }
  return lcm;
}

Integer scaled_weight(const Graph& g, VertexId v, const Integer& scale) {
  const Rational w = g.weight(v) * scale;
  return numerator(w);  // exact: scale is a multiple of the denominator
}

// Node layout of the double-cover network: source, n primed copies,
// n double-primed copies, sink.
struct CoverNetwork {
  MaxFlow flow;
  Integer scale;
  Integer value;          // max-flow value
  std::vector<int> left;  // arc id of source -> v'
  std::vector<int> mid_a; // arc id of u' -> v'' per edge
  std::vector<int> mid_b; // arc id of v' -> u'' per edge
  int source;
  int sink;
};

CoverNetwork solve_double_cover(const Graph& g) {
  const int n = g.vertex_count();
  CoverNetwork net{MaxFlow(2 * n + 2), common_denominator(g), 0, {}, {}, {}, 0, 2 * n + 1};
  const auto primed = [](VertexId v) { return 1 + v; };
  const auto doubled = [n](VertexId v) { return 1 + n + v; };

  Integer inf = 1;
  for (VertexId v = 0; v < n; ++v) inf += scaled_weight(g, v, net.scale);

  for (VertexId v = 0; v < n; ++v) {
    net.left.push_back(net.flow.add_arc(net.source, primed(v),
                                        scaled_weight(g, v, net.scale)));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.ends(e);
    net.mid_a.push_back(net.flow.add_arc(primed(u), doubled(v), inf));
    net.mid_b.push_back(net.flow.add_arc(primed(v), doubled(u), inf));
  }
  for (VertexId v = 0; v < n; ++v) {
    net.flow.add_arc(doubled(v), net.sink, scaled_weight(g, v, net.scale));
  }
  net.value = net.flow.run(net.source, net.sink);
  return net;
}

}  // namespace

DualSolution make_dual(const Graph& g, std::vector<Rational> values) {
  if (static_cast<int>(values.size()) != g.edge_count())
    fail(Errc::InvalidParams, "dual value count does not match edge count");
  Rational total = 0;
  for (const auto& y : values) {
    if (y < 0) fail(Errc::InvalidParams, "negative dual value");
    total += y;
  }
  return DualSolution{std::move(values), std::move(total)};
}

HalfIntegralSolution solve_lp(const Graph& g) {
  const int n = g.vertex_count();
  auto net = solve_double_cover(g);
  const auto reach = net.flow.source_side(net.source);

  HalfIntegralSolution out;
  out.values.assign(n, 0);
  out.objective = 0;
  for (VertexId v = 0; v < n; ++v) {
    // v' is in the double-cover min cover iff unreachable, v'' iff reachable.
    const int hits = int(!reach[1 + v]) + int(reach[1 + n + v]);
    out.values[v] = Rational(hits, 2);
    out.objective += g.weight(v) * out.values[v];
  }
  return out;
}

NTDecomposition nt_decompose(const Graph& g, const HalfIntegralSolution& x) {
  const int n = g.vertex_count();
  if (static_cast<int>(x.values.size()) != n)
    fail(Errc::InvalidSolution, "solution size does not match graph");
  const Rational half(1, 2);
  for (const auto& value : x.values) {
    if (value != 0 && value != half && value != 1)
      fail(Errc::InvalidSolution, "solution is not half-integral");
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.ends(e);
    if (x.values[u] + x.values[v] < 1)
      fail(Errc::InvalidSolution, "solution leaves an edge uncovered");
  }

  NTDecomposition out;
  for (VertexId v = 0; v < n; ++v) {
    if (x.values[v] == 0) out.zero.push_back(v);
    else if (x.values[v] == half) out.half.push_back(v);
    else out.one.push_back(v);
  }
  out.half_subgraph = induced_subgraph(g, out.half);
  return out;
}

Graph normalize(const Graph& g) {
  const Rational total = g.total_weight();
  if (total == 0) fail(Errc::DegenerateWeights, "all vertex weights are zero");
  const Rational scale = Rational(2) / total;
  Graph out = g;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out.set_weight(v, g.weight(v) * scale);
  }
  return out;
}

std::optional<DualSolution> recover_dual(const Graph& g) {
  if (g.total_weight() != 2)
    fail(Errc::InvalidParams, "recover_dual requires a normalized graph");

  auto net = solve_double_cover(g);
  Integer supply = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    supply += scaled_weight(g, v, net.scale);
  }
  if (net.value != supply) return std::nullopt;  // tight system infeasible

  std::vector<Rational> values(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Rational z_a(net.flow.flow_on(net.mid_a[e]), net.scale);
    const Rational z_b(net.flow.flow_on(net.mid_b[e]), net.scale);
    values[e] = (z_a + z_b) / 2;
  }
  return make_dual(g, std::move(values));
}

Graph weights_from_edge_combination(const Graph& g, std::span<const Rational> lambda) {
  if (g.edge_count() == 0) fail(Errc::NoEdges, "graph has no edges");
  if (static_cast<int>(lambda.size()) != g.edge_count())
    fail(Errc::InvalidCombination, "one coefficient per edge required");
  Rational sum = 0;
  for (const auto& l : lambda) {
    if (l < 0) fail(Errc::InvalidCombination, "negative coefficient");
    sum += l;
  }
  if (sum != 1) fail(Errc::InvalidCombination, "coefficients must sum to one");

  Graph out = g;
  std::vector<Rational> weights(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.ends(e);
    weights[u] += lambda[e];
    weights[v] += lambda[e];
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.set_weight(v, weights[v]);
  return out;
}

Graph sample_qw(const Graph& g, unsigned long long seed) {
  if (g.edge_count() == 0) fail(Errc::NoEdges, "graph has no edges");
  std::mt19937_64 engine(seed);
  std::vector<Integer> numerators(g.edge_count());
  Integer sum = 0;
  for (auto& num : numerators) {
    num = Integer(engine() % 1000);
    sum += num;
  }
  if (sum == 0) {
    numerators[0] = 1;
    sum = 1;
  }
  std::vector<Rational> lambda;
  lambda.reserve(numerators.size());
  for (const auto& num : numerators) lambda.emplace_back(num, sum);
  return weights_from_edge_combination(g, lambda);
}

bool dual_is_tight(const Graph& g, const DualSolution& y) {
  if (static_cast<int>(y.values.size()) != g.edge_count()) return false;
  for (const auto& value : y.values) {
    if (value < 0) return false;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Rational at_v = 0;
    for (const auto& [e, nb] : g.neighbors(v)) at_v += y.values[e];
    if (at_v != g.weight(v)) return false;
  }
  return true;
}

}  // namespace vcb
