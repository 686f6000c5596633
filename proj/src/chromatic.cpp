#include "vcb/chromatic.hpp"

#include <algorithm>

#include "vcb/bipartize.hpp"
#include "vcb/error.hpp"

namespace vcb {

namespace {

// The 2 rho - 1 window independent sets: relabel {v_p} followed by layers
// L_0 .. L_{2 rho - 3} as ~L_1 .. ~L_{2 rho - 1}, then from each start take
// offsets 0, 3, 5, ..., 2 rho - 3 cyclically. Trailing layers are grouped
// into the odd- and even-indexed unions R_1 and R_2.
struct LayerSets {
  std::vector<std::vector<VertexId>> window;  // ~L_1 .. ~L_{2 rho - 1}
  std::vector<VertexId> trailing_odd;         // R_1
  std::vector<VertexId> trailing_even;        // R_2
};

LayerSets split_layers(const Graph& g, VertexId vp, int rho) {
  const std::vector<VertexId> just_vp{vp};
  const auto ct = contract(g, just_vp);
  const auto ld = layer_decomposition(ct);

  const int window_layers = 2 * rho - 2;  // L_0 .. L_{2 rho - 3}
  if (static_cast<int>(ld.layers.size()) < window_layers)
    fail(Errc::NotNearBipartite, "layer decomposition shallower than the odd girth allows");

  LayerSets out;
  out.window.push_back({vp});
  for (int i = 0; i < window_layers; ++i) {
    std::vector<VertexId> layer;
    for (VertexId v : ld.layers[i]) layer.push_back(ct.origin[v]);
    std::sort(layer.begin(), layer.end());
    out.window.push_back(std::move(layer));
  }
  for (int i = window_layers; i < static_cast<int>(ld.layers.size()); ++i) {
    auto& bucket = (i % 2 == 1) ? out.trailing_odd : out.trailing_even;
    for (VertexId v : ld.layers[i]) bucket.push_back(ct.origin[v]);
  }
  std::sort(out.trailing_odd.begin(), out.trailing_odd.end());
  std::sort(out.trailing_even.begin(), out.trailing_even.end());
  return out;
}

FcnCertificate fcn_core(const Graph& g, VertexId vp) {
  const auto girth = odd_girth(g);
  const int rho = (girth->length + 1) / 2;
  const int count = 2 * rho - 1;
  const auto sets = split_layers(g, vp, rho);

  std::vector<int> offsets{0};
  for (int off = 3; off <= 2 * rho - 3; off += 2) offsets.push_back(off);

  FcnCertificate cert;
  const Rational value(1, rho - 1);
  for (int start = 0; start < count; ++start) {
    std::vector<VertexId> members;
    bool has_vp = false;
    for (int off : offsets) {
      const int index = (start + off) % count;
      if (index == 0) has_vp = true;
      members.insert(members.end(), sets.window[index].begin(),
                     sets.window[index].end());
    }
    const auto& trailing = has_vp ? sets.trailing_even : sets.trailing_odd;
    members.insert(members.end(), trailing.begin(), trailing.end());
    std::sort(members.begin(), members.end());
    cert.primal.sets.push_back(std::move(members));
    cert.primal.values.push_back(value);
  }
  cert.primal.objective = Rational(count, rho - 1);

  cert.dual_z.assign(g.vertex_count(), 0);
  for (VertexId v : girth->vertices) cert.dual_z[v] = value;
  cert.value = 2 + value;
  return cert;
}

void lift_set(std::vector<VertexId>& members, const ContractedGraph& ct,
              const std::vector<VertexId>& replacement) {
  std::vector<VertexId> lifted;
  for (VertexId v : members) {
    if (v == ct.contracted) {
      lifted.insert(lifted.end(), replacement.begin(), replacement.end());
    } else {
      lifted.push_back(ct.origin[v]);
    }
  }
  std::sort(lifted.begin(), lifted.end());
  members = std::move(lifted);
}

}  // namespace

bool fractional_coloring_feasible(const Graph& g, const FractionalColoring& fc) {
  if (fc.sets.size() != fc.values.size()) return false;
  Rational objective = 0;
  for (const auto& value : fc.values) {
    if (value < 0) return false;
    objective += value;
  }
  if (objective != fc.objective) return false;
  for (const auto& set : fc.sets) {
    for (VertexId v : set) {
      if (!g.has_vertex(v)) return false;
    }
    if (!is_independent_set(g, set)) return false;
  }
  std::vector<Rational> covered(g.vertex_count(), 0);
  for (std::size_t i = 0; i < fc.sets.size(); ++i) {
    for (VertexId v : fc.sets[i]) covered[v] += fc.values[i];
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (covered[v] < 1) return false;
  }
  return true;
}

FcnCertificate fcn_single_vertex(const Graph& g, VertexId vp) {
  if (!g.has_vertex(vp)) fail(Errc::NotNearBipartite, "unknown vertex vp");
  if (!odd_girth(g)) fail(Errc::NotNearBipartite, "graph is bipartite");
  {
    const std::vector<VertexId> just_vp{vp};
    const auto rest = remove_vertices(g, just_vp);
    if (!check_bipartite(rest.graph).ok())
      fail(Errc::NotNearBipartite, "removing vp does not bipartize the graph");
  }
  return fcn_core(g, vp);
}

FcnUpperResult fcn_upper_3colorable(const Graph& g, const Coloring& coloring) {
  const auto classes = validate_coloring(g, coloring);
  if (classes.size() != 3)
    fail(Errc::InvalidColoring, "exactly three nonempty classes required");

  FcnUpperResult out;
  out.bound = 0;
  for (int i = 0; i < 3; ++i) {
    const auto ct = contract(g, classes[i]);
    FractionalColoring lifted;
    Rational class_bound;
    if (const auto girth = odd_girth(ct.graph)) {
      out.rho[i] = (girth->length + 1) / 2;
      auto cert = fcn_core(ct.graph, ct.contracted);
      for (auto& set : cert.primal.sets) lift_set(set, ct, classes[i]);
      lifted = std::move(cert.primal);
      class_bound = cert.value;
    } else {
      // Bipartite contraction: both lifted sides cover every vertex once.
      out.contraction_bipartite[i] = true;
      const auto check = check_bipartite(ct.graph);
      for (auto side : {check.bipartition->side_a, check.bipartition->side_b}) {
        lift_set(side, ct, classes[i]);
        lifted.sets.push_back(std::move(side));
        lifted.values.push_back(1);
      }
      lifted.objective = 2;
      class_bound = 2;
    }
    if (!fractional_coloring_feasible(g, lifted))
      fail(Errc::InvalidColoring, "lifted certificate failed verification");
    out.certificates[i] = std::move(lifted);
    if (i == 0 || class_bound < out.bound) out.bound = class_bound;
  }
  return out;
}

Rational integrality_gap(const Rational& fcn_value) {
  if (fcn_value < 2) fail(Errc::InvalidFcn, "fractional chromatic number below 2");
  return 2 - 2 / fcn_value;
}

}  // namespace vcb
