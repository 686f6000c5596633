#include "vcb/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "vcb/bounds.hpp"
#include "vcb/chromatic.hpp"
#include "vcb/error.hpp"
#include "vcb/io.hpp"
#include "vcb/tightgen.hpp"

namespace vcb::cli {

namespace {

using nlohmann::json;

json rational_json(const Rational& value) { return to_string(value); }

std::optional<Rational> rational_from(const json& value) {
  if (!value.is_string()) return std::nullopt;
  return parse_rational(value.get<std::string>());
}

json ids_json(std::span<const VertexId> ids) {
  json out = json::array();
  for (VertexId v : ids) out.push_back(v + 1);
  return out;
}

json instance_json(const Instance& instance) {
  const Graph& g = instance.graph;
  json out;
  out["vertices"] = g.vertex_count();
  json weights = json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    weights.push_back(rational_json(g.weight(v)));
  out["weights"] = std::move(weights);
  json edges = json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.ends(e);
    edges.push_back(json::array({a + 1, b + 1}));
  }
  out["edges"] = std::move(edges);
  if (instance.s) out["s"] = ids_json(canonical_set(g, *instance.s));
  if (instance.dual) {
    json dual = json::array();
    for (const auto& value : instance.dual->values)
      dual.push_back(rational_json(value));
    out["dual"] = std::move(dual);
  }
  return out;
}

bool instance_matches(const Instance& instance, const json& echo) {
  return echo == instance_json(instance);
}

void write_output(const json& report, const std::string& out_path,
                  std::ostream& out) {
  if (out_path.empty()) {
    out << report.dump(2) << "\n";
    return;
  }
  std::ofstream file(out_path);
  if (!file) fail(Errc::ParseError, "cannot write '" + out_path + "'");
  file << report.dump(2) << "\n";
}

struct Check {
  std::string name;
  bool ok;
};

json checks_json(const std::vector<Check>& checks) {
  json out = json::object();
  for (const auto& [name, ok] : checks) out[name] = ok;
  return out;
}

bool all_ok(const std::vector<Check>& checks) {
  for (const auto& check : checks) {
    if (!check.ok) return false;
  }
  return true;
}

// ---------------------------------------------------------------------
// analyze

std::optional<std::vector<VertexId>> ids_from(const Graph& g, const json& array) {
  if (!array.is_array()) return std::nullopt;
  std::vector<VertexId> out;
  for (const auto& item : array) {
    if (!item.is_number_integer()) return std::nullopt;
    const int id = item.get<int>() - 1;
    if (!g.has_vertex(id)) return std::nullopt;
    out.push_back(id);
  }
  return out;
}

std::optional<std::vector<Rational>> rationals_from(const json& array,
                                                    std::size_t expected) {
  if (!array.is_array() || array.size() != expected) return std::nullopt;
  std::vector<Rational> out;
  for (const auto& item : array) {
    auto value = rational_from(item);
    if (!value || *value < 0) return std::nullopt;
    out.push_back(std::move(*value));
  }
  return out;
}

// Re-derives every certificate in an analysis report from the instance;
// any mismatch shows up as a failed named check.
std::vector<Check> verify_analysis(const Instance& instance, const json& report,
                                   const OracleBudget& budget) {
  std::vector<Check> checks;
  const auto push = [&](const std::string& name, bool ok) {
    checks.push_back({name, ok});
  };

  push("instanceMatches",
       report.contains("instance") && instance_matches(instance, report["instance"]));

  Graph gn;
  try {
    gn = normalize(instance.graph);
  } catch (const Error&) {
    push("normalizable", false);
    return checks;
  }

  const auto s = report.contains("sUsed") ? ids_from(gn, report["sUsed"])
                                          : std::nullopt;
  if (!s) {
    push("reportWellFormed", false);
    return checks;
  }
  const auto set = canonical_set(gn, *s);

  {
    const auto expected = rationals_from(report.value("normalizedWeights", json()),
                                         gn.vertex_count());
    bool ok = expected.has_value();
    if (ok) {
      for (VertexId v = 0; v < gn.vertex_count(); ++v) {
        if ((*expected)[v] != gn.weight(v)) ok = false;
      }
    }
    push("normalizedWeights", ok);
  }

  const auto x = solve_lp(gn);
  push("lpValue", rational_from(report.value("lpValue", json())) == x.objective);
  {
    const auto nt = nt_decompose(gn, x);
    const json& classes = report.value("ntClasses", json());
    push("ntClasses", classes.is_object() &&
                          ids_from(gn, classes.value("zero", json())) == nt.zero &&
                          ids_from(gn, classes.value("half", json())) == nt.half &&
                          ids_from(gn, classes.value("one", json())) == nt.one);
  }

  const json& certificates = report.value("certificates", json::object());
  const auto cover = ids_from(gn, certificates.value("cover", json()));
  if (!cover) {
    push("reportWellFormed", false);
    return checks;
  }
  {
    const auto mask = make_mask(gn.vertex_count(), *cover);
    bool feasible = true;
    for (EdgeId e = 0; e < gn.edge_count(); ++e) {
      const auto [a, b] = gn.ends(e);
      if (!mask[a] && !mask[b]) feasible = false;
    }
    push("coverFeasible", feasible);
    push("coverWeight",
         rational_from(certificates.value("coverWeight", json())) ==
             gn.weight_of(*cover));
  }

  const auto cover_weight = gn.weight_of(*cover);
  const std::string opt_mode = report.value("optMode", "");
  std::optional<Rational> opt_value;
  if (opt_mode == "BruteExact" && gn.vertex_count() <= budget.max_vertices_exact) {
    opt_value = brute_opt_vc(gn, budget).weight;
  } else if (opt_mode == "LPLowerBound") {
    opt_value = x.objective;
  }
  push("optValue", opt_value.has_value() &&
                       rational_from(report.value("optValue", json())) == *opt_value);
  push("achieved", opt_value.has_value() && *opt_value != 0 &&
                       rational_from(report.value("achieved", json())) ==
                           cover_weight / *opt_value);

  const bool bound_applicable = report.value("boundApplicable", false);
  if (!bound_applicable) return checks;

  const auto dual_values =
      rationals_from(certificates.value("dual", json()), gn.edge_count());
  if (!dual_values) {
    push("dualValid", false);
    return checks;
  }
  DualSolution dual = make_dual(gn, *dual_values);
  push("dualValid", dual.total == 1 && dual_is_tight(gn, dual));
  if (dual.total != 1) return checks;

  push("alpha", rational_from(report.value("alpha", json())) ==
                    compute_alpha(dual, set, gn));

  std::optional<int> rho;
  if (report.contains("rho") && report["rho"].is_number_integer())
    rho = report["rho"].get<int>();
  {
    bool ok;
    if (set.empty()) {
      ok = !rho.has_value();
    } else {
      const auto girth = odd_girth(contract(gn, set).graph);
      ok = girth ? (rho && *rho == (girth->length + 1) / 2) : !rho.has_value();
    }
    push("rho", ok);
  }

  const auto alpha = compute_alpha(dual, set, gn);
  const auto bound = rational_from(report.value("bound", json()));
  push("bound", bound.has_value() &&
                    (!rho || *rho >= 2) &&
                    *bound == theoretical_bound(rho, alpha));
  push("achievedWithinBound",
       bound.has_value() && opt_value.has_value() && *opt_value != 0 &&
       cover_weight / *opt_value <= *bound);

  if (!set.empty() && rho.has_value()) {
    const auto ct = contract(gn, set);
    const auto layers = layer_decomposition(ct);
    {
      json sizes = json::array();
      for (const auto& layer : layers.layers) sizes.push_back(layer.size());
      push("layerSizes", certificates.value("layerSizes", json()) == sizes);
    }

    const json& family_json = certificates.value("coverFamily", json());
    const auto family = edge_separate_covers(ct, layers);
    bool family_ok = family_json.is_object();
    if (family_ok) {
      json covers = json::array();
      json marked = json::array();
      for (std::size_t i = 0; i < family.covers.size(); ++i) {
        covers.push_back(ids_json(family.covers[i]));
        json edge_ids = json::array();
        for (EdgeId e : family.marked_edges[i]) edge_ids.push_back(e);
        marked.push_back(std::move(edge_ids));
      }
      family_ok = family_json.value("covers", json()) == covers &&
                  family_json.value("markedEdges", json()) == marked;
    }
    // Semantic checks on the family itself: feasibility, disjointness and
    // the dual counting identity w(U) = y(E') + y(E_U).
    if (family_ok) {
      const auto s_mask = make_mask(gn.vertex_count(), set);
      const auto split = boundary_and_inside(gn, set);
      Rational outside = dual.total;
      for (EdgeId e : split.crossing) outside -= dual.values[e];
      for (EdgeId e : split.inside) outside -= dual.values[e];
      std::vector<int> marked_seen(gn.edge_count(), 0);
      for (std::size_t i = 0; i < family.covers.size() && family_ok; ++i) {
        const auto mask = make_mask(gn.vertex_count(), family.covers[i]);
        for (EdgeId e = 0; e < gn.edge_count(); ++e) {
          const auto [a, b] = gn.ends(e);
          if (s_mask[a] || s_mask[b]) continue;
          if (!mask[a] && !mask[b]) family_ok = false;  // cover infeasible
        }
        Rational surplus = 0;
        for (EdgeId e : family.marked_edges[i]) {
          surplus += dual.values[e];
          if (++marked_seen[e] > 1) family_ok = false;  // overlap
        }
        if (gn.weight_of(family.covers[i]) != outside + surplus)
          family_ok = false;
      }
    }
    push("coverFamily", family_ok);
  }
  return checks;
}

struct AnalyzeInputs {
  Instance instance;
  std::vector<VertexId> s_used;
  RatioReport ratio;
  std::optional<ColoringPipelineResult> pipeline;
  OracleBudget budget;
};

json build_analysis_report(const AnalyzeInputs& inputs) {
  const Instance& instance = inputs.instance;
  const RatioReport& ratio = inputs.ratio;
  const Graph gn = normalize(instance.graph);

  json report;
  report["kind"] = "analysis";
  report["instance"] = instance_json(instance);
  report["sUsed"] = ids_json(inputs.s_used);
  {
    json weights = json::array();
    for (VertexId v = 0; v < gn.vertex_count(); ++v)
      weights.push_back(rational_json(gn.weight(v)));
    report["normalizedWeights"] = std::move(weights);
  }
  report["lpValue"] = rational_json(ratio.round.lp_value);
  {
    const auto nt = nt_decompose(gn, solve_lp(gn));
    report["ntClasses"] = {{"zero", ids_json(nt.zero)},
                           {"half", ids_json(nt.half)},
                           {"one", ids_json(nt.one)}};
  }
  report["rho"] = ratio.rho ? json(*ratio.rho) : json();
  report["alpha"] = ratio.alpha ? rational_json(*ratio.alpha) : json();
  report["caseTag"] = ratio.case_tag ? json(case_tag_name(*ratio.case_tag)) : json();
  report["bound"] = ratio.bound ? rational_json(*ratio.bound) : json();
  report["boundApplicable"] = ratio.bound_applicable;
  report["achieved"] = rational_json(ratio.achieved);
  report["optMode"] = opt_mode_name(ratio.opt_mode);
  report["optValue"] = rational_json(ratio.opt_mode == OptMode::BruteExact
                                         ? ratio.round.opt_value
                                         : ratio.round.lp_value);

  json certificates;
  certificates["cover"] = ids_json(ratio.round.cover);
  certificates["coverWeight"] = rational_json(ratio.round.cover_weight);
  certificates["weightOne"] = rational_json(ratio.round.weight_one);
  certificates["weightS"] = rational_json(ratio.round.weight_s);
  certificates["weightRest"] = rational_json(ratio.round.weight_rest);
  if (ratio.dual) {
    json dual = json::array();
    for (const auto& value : ratio.dual->values)
      dual.push_back(rational_json(value));
    certificates["dual"] = std::move(dual);
  }
  const auto set = canonical_set(gn, inputs.s_used);
  if (ratio.rho && !set.empty()) {
    const auto ct = contract(gn, set);
    const auto layers = layer_decomposition(ct);
    json sizes = json::array();
    for (const auto& layer : layers.layers) sizes.push_back(layer.size());
    certificates["layerSizes"] = std::move(sizes);

    const auto family = edge_separate_covers(ct, layers);
    json covers = json::array();
    json marked = json::array();
    for (std::size_t i = 0; i < family.covers.size(); ++i) {
      covers.push_back(ids_json(family.covers[i]));
      json edge_ids = json::array();
      for (EdgeId e : family.marked_edges[i]) edge_ids.push_back(e);
      marked.push_back(std::move(edge_ids));
    }
    certificates["coverFamily"] = {{"covers", std::move(covers)},
                                   {"markedEdges", std::move(marked)}};
  }
  report["certificates"] = std::move(certificates);

  if (inputs.pipeline) {
    const auto& pipeline = *inputs.pipeline;
    json coloring;
    coloring["k"] = pipeline.k;
    coloring["validAlpha"] = rational_json(pipeline.valid_alpha);
    coloring["worstCaseBound"] = rational_json(pipeline.worst_case_bound);
    coloring["rotationSteps"] = pipeline.steps.size();
    json class_weights = json::array();
    for (VertexId v = 0; v < pipeline.aux.k_graph.vertex_count(); ++v)
      class_weights.push_back(rational_json(pipeline.aux.k_graph.weight(v)));
    coloring["classWeights"] = std::move(class_weights);
    report["coloring"] = std::move(coloring);
  }

  report["checks"] = checks_json(verify_analysis(instance, report, inputs.budget));
  return report;
}

// ---------------------------------------------------------------------
// fcn

json fractional_coloring_json(const FractionalColoring& fc) {
  json sets = json::array();
  for (const auto& set : fc.sets) sets.push_back(ids_json(set));
  json values = json::array();
  for (const auto& value : fc.values) values.push_back(rational_json(value));
  return {{"sets", std::move(sets)},
          {"values", std::move(values)},
          {"objective", rational_json(fc.objective)}};
}

std::optional<FractionalColoring> fractional_coloring_from(const Graph& g,
                                                           const json& body) {
  if (!body.is_object()) return std::nullopt;
  FractionalColoring fc;
  const json& sets = body.value("sets", json());
  const json& values = body.value("values", json());
  if (!sets.is_array() || !values.is_array() || sets.size() != values.size())
    return std::nullopt;
  for (const auto& item : sets) {
    auto ids = ids_from(g, item);
    if (!ids) return std::nullopt;
    fc.sets.push_back(std::move(*ids));
  }
  for (const auto& item : values) {
    auto value = rational_from(item);
    if (!value) return std::nullopt;
    fc.values.push_back(std::move(*value));
  }
  auto objective = rational_from(body.value("objective", json()));
  if (!objective) return std::nullopt;
  fc.objective = std::move(*objective);
  return fc;
}

std::vector<Check> verify_fcn(const Instance& instance, const json& report,
                              const OracleBudget& budget) {
  std::vector<Check> checks;
  const auto push = [&](const std::string& name, bool ok) {
    checks.push_back({name, ok});
  };
  const Graph& g = instance.graph;
  push("instanceMatches",
       report.contains("instance") && instance_matches(instance, report["instance"]));

  const std::string mode = report.value("mode", "");
  const auto value = rational_from(report.value("value", json()));
  if (!value) {
    push("reportWellFormed", false);
    return checks;
  }
  const auto ig = rational_from(report.value("ig", json()));
  push("igFormula", *value >= 2 && ig == integrality_gap(*value));

  if (mode == "bipartite") {
    push("structure", check_bipartite(g).ok());
    push("value", *value == 2);
    const auto primal = fractional_coloring_from(g, report.value("primal", json()));
    push("primalFeasible", primal && fractional_coloring_feasible(g, *primal) &&
                               primal->objective == *value);
    return checks;
  }

  if (mode == "single-vertex") {
    const int apex = report.value("apex", 0) - 1;
    const auto girth = odd_girth(g);
    bool structure = g.has_vertex(apex) && girth.has_value();
    if (structure) {
      const std::vector<VertexId> just_vp{apex};
      structure = check_bipartite(remove_vertices(g, just_vp).graph).ok();
    }
    push("structure", structure);
    if (!structure) return checks;
    const int rho = (girth->length + 1) / 2;
    push("rho", report.value("rho", 0) == rho);
    push("value", *value == 2 + Rational(1, rho - 1));

    const auto primal = fractional_coloring_from(g, report.value("primal", json()));
    push("primalFeasible", primal && fractional_coloring_feasible(g, *primal));
    push("strongDuality", primal && primal->objective == *value);

    const auto z = rationals_from(report.value("dualZ", json()), g.vertex_count());
    bool dual_ok = z.has_value();
    if (dual_ok) {
      Rational dual_total = 0;
      for (const auto& entry : *z) dual_total += entry;
      dual_ok = dual_total == *value;
      if (g.vertex_count() <= budget.max_vertices_exact) {
        for (const auto& ind : maximal_independent_sets(g, budget.max_vertices_exact)) {
          Rational inside = 0;
          for (VertexId v : ind) inside += (*z)[v];
          if (inside > 1) dual_ok = false;
        }
      }
    }
    push("dualFeasible", dual_ok);
    return checks;
  }

  if (mode == "3-coloring") {
    const json& families = report.value("primal", json());
    bool primal_ok = families.is_array() && families.size() == 3;
    Rational best;
    bool have_best = false;
    if (primal_ok) {
      for (const auto& body : families) {
        const auto fc = fractional_coloring_from(g, body);
        if (!fc || !fractional_coloring_feasible(g, *fc)) {
          primal_ok = false;
          break;
        }
        if (!have_best || fc->objective < best) {
          best = fc->objective;
          have_best = true;
        }
      }
    }
    push("primalFeasible", primal_ok);
    push("value", primal_ok && best == *value);
    return checks;
  }

  push("reportWellFormed", false);
  return checks;
}

// ---------------------------------------------------------------------
// commands

int cmd_analyze(const std::string& instance_path, bool auto_color,
                bool greedy_bipartize, bool self_verify, int brute_max,
                const std::string& out_path, std::ostream& out, std::ostream& err) {
  AnalyzeInputs inputs;
  inputs.instance = parse_instance_file(instance_path);
  inputs.budget.max_vertices_exact = brute_max;

  if (auto_color) {
    inputs.pipeline = coloring_pipeline(inputs.instance.graph);
    inputs.s_used = inputs.pipeline->s;
  } else if (inputs.instance.s) {
    inputs.s_used = canonical_set(inputs.instance.graph, *inputs.instance.s);
  }
  if (greedy_bipartize) {
    inputs.s_used = extend_to_bipartizing(inputs.instance.graph, inputs.s_used);
  }

  inputs.ratio = analyze(inputs.instance.graph, inputs.s_used,
                         inputs.instance.dual, inputs.budget);
  const json report = build_analysis_report(inputs);
  write_output(report, out_path, out);

  if (self_verify) {
    const auto checks = verify_analysis(inputs.instance, report, inputs.budget);
    if (!all_ok(checks)) {
      err << "self-verification failed\n";
      return 2;
    }
  }
  return 0;
}

int cmd_generate(const std::string& family, int cycle_len, int count,
                 const std::vector<int>& set_ids, const std::string& alpha_text,
                 int rho, std::optional<unsigned long long> seed, int limit_cycles,
                 const std::string& out_path, std::ostream& out) {
  Instance instance;
  const auto alpha = [&]() -> Rational {
    const auto value = parse_rational(alpha_text);
    if (!value || *value < 0 || *value > 1)
      fail(Errc::InvalidParams, "alpha must be a rational in [0, 1]");
    return *value;
  };

  if (family == "basic") {
    if (cycle_len < 3 || cycle_len % 2 == 0)
      fail(Errc::InvalidParams, "--cycle must be odd and at least 3");
    const Graph g = Graph::cycle(cycle_len, 0);
    std::vector<VertexId> cycle(cycle_len);
    for (int i = 0; i < cycle_len; ++i) cycle[i] = i;
    auto weighted = basic_weight(g, 0, cycle);
    instance = {std::move(weighted.graph), std::vector<VertexId>{0},
                std::move(weighted.dual)};
  } else if (family == "convex") {
    if (cycle_len < 3 || cycle_len % 2 == 0)
      fail(Errc::InvalidParams, "--cycle must be odd and at least 3");
    if (count < 1) fail(Errc::InvalidParams, "--count must be positive");
    // `count` odd cycles glued at vertex 0.
    Graph g(1, 0);
    std::vector<CycleWeight> combination(count);
    for (int c = 0; c < count; ++c) {
      std::vector<VertexId> cycle{0};
      VertexId prev = 0;
      for (int i = 1; i < cycle_len; ++i) {
        const VertexId v = g.add_vertex(0);
        g.add_edge(prev, v);
        cycle.push_back(v);
        prev = v;
      }
      g.add_edge(prev, 0);
      combination[c].cycle = std::move(cycle);
      combination[c].lambda = Rational(1, count);
    }
    if (seed) {
      std::mt19937_64 engine(*seed);
      std::vector<Integer> numerators(count);
      Integer sum = 0;
      for (auto& num : numerators) {
        num = Integer(engine() % 1000);
        sum += num;
      }
      if (sum == 0) {
        numerators[0] = 1;
        sum = 1;
      }
      for (int c = 0; c < count; ++c)
        combination[c].lambda = Rational(numerators[c], sum);
    }
    auto weighted = convex_weight(g, 0, combination);
    instance = {std::move(weighted.graph), std::vector<VertexId>{0},
                std::move(weighted.dual)};
  } else if (family == "lifted") {
    if (cycle_len < 3 || cycle_len % 2 == 0)
      fail(Errc::InvalidParams, "--cycle must be odd and at least 3");
    if (set_ids.empty()) fail(Errc::InvalidParams, "--set is required");
    const Graph g = Graph::cycle(cycle_len, 0);
    std::vector<VertexId> indep;
    for (int id : set_ids) indep.push_back(id - 1);
    const auto ct = contract(g, canonical_set(g, indep));
    const auto cycles = shortest_odd_cycles(ct.graph, ct.contracted, limit_cycles);
    if (cycles.cycles.empty())
      fail(Errc::InvalidParams, "no shortest odd cycle through the contracted node");
    auto weighted = lifted_dual_weight(g, indep, cycles.cycles.front());
    instance = {std::move(weighted.graph), std::move(indep), std::move(weighted.dual)};
  } else if (family == "alpha-rho") {
    auto tight = gen_alpha_rho(alpha(), rho);
    instance = {std::move(tight.graph), std::move(tight.s), std::move(tight.dual)};
  } else if (family == "alpha-bip") {
    auto tight = gen_alpha_bipartite(alpha(), cycle_len);
    instance = {std::move(tight.graph), std::move(tight.s), std::move(tight.dual)};
  } else {
    fail(Errc::InvalidParams, "unknown family '" + family + "'");
  }

  if (out_path.empty()) {
    serialize_instance(instance, out);
  } else {
    std::ofstream file(out_path);
    if (!file) fail(Errc::ParseError, "cannot write '" + out_path + "'");
    serialize_instance(instance, file);
  }
  return 0;
}

int cmd_fcn(const std::string& instance_path, int apex_1based, bool self_verify,
            int brute_max, const std::string& out_path, std::ostream& out,
            std::ostream& err) {
  const Instance instance = parse_instance_file(instance_path);
  const Graph& g = instance.graph;
  OracleBudget budget;
  budget.max_vertices_exact = brute_max;

  json report;
  report["kind"] = "fcn";
  report["instance"] = instance_json(instance);

  if (apex_1based > 0) {
    const auto cert = fcn_single_vertex(g, apex_1based - 1);
    const int rho = (odd_girth(g)->length + 1) / 2;
    report["mode"] = "single-vertex";
    report["apex"] = apex_1based;
    report["rho"] = rho;
    report["value"] = rational_json(cert.value);
    report["ig"] = rational_json(integrality_gap(cert.value));
    report["primal"] = fractional_coloring_json(cert.primal);
    json z = json::array();
    for (const auto& entry : cert.dual_z) z.push_back(rational_json(entry));
    report["dualZ"] = std::move(z);
  } else if (check_bipartite(g).ok()) {
    const auto check = check_bipartite(g);
    FractionalColoring primal;
    primal.sets = {check.bipartition->side_a, check.bipartition->side_b};
    primal.values = {1, 1};
    primal.objective = 2;
    report["mode"] = "bipartite";
    report["value"] = rational_json(2);
    report["ig"] = rational_json(1);
    report["primal"] = fractional_coloring_json(primal);
  } else {
    const auto coloring = heuristic_coloring(g);
    const int k = static_cast<int>(validate_coloring(g, coloring).size());
    if (k != 3)
      fail(Errc::InvalidColoring,
           "graph is not bipartite and the greedy coloring needs " +
               std::to_string(k) + " classes; supply --apex for the "
               "single-vertex certificate");
    const auto upper = fcn_upper_3colorable(g, coloring);
    report["mode"] = "3-coloring";
    report["value"] = rational_json(upper.bound);
    report["ig"] = rational_json(integrality_gap(upper.bound));
    json families = json::array();
    for (const auto& fc : upper.certificates)
      families.push_back(fractional_coloring_json(fc));
    report["primal"] = std::move(families);
    json rhos = json::array();
    for (int i = 0; i < 3; ++i)
      rhos.push_back(upper.rho[i] ? json(*upper.rho[i]) : json());
    report["rhos"] = std::move(rhos);
  }

  report["checks"] = checks_json(verify_fcn(instance, report, budget));
  write_output(report, out_path, out);

  if (self_verify) {
    const auto checks = verify_fcn(instance, report, budget);
    if (!all_ok(checks)) {
      err << "self-verification failed\n";
      return 2;
    }
  }
  return 0;
}

int cmd_verify(const std::string& instance_path, const std::string& report_path,
               int brute_max, std::ostream& out, std::ostream& err) {
  const Instance instance = parse_instance_file(instance_path);
  std::ifstream file(report_path);
  if (!file) fail(Errc::ParseError, "cannot open '" + report_path + "'");
  json report;
  try {
    file >> report;
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("bad report: ") + e.what());
  }

  OracleBudget budget;
  budget.max_vertices_exact = brute_max;
  const std::string kind = report.value("kind", "");
  std::vector<Check> checks;
  if (kind == "analysis") {
    checks = verify_analysis(instance, report, budget);
  } else if (kind == "fcn") {
    checks = verify_fcn(instance, report, budget);
  } else {
    fail(Errc::ParseError, "report kind missing or unknown");
  }

  for (const auto& [name, ok] : checks) {
    out << (ok ? "[ ok ] " : "[FAIL] ") << name << "\n";
  }
  if (!all_ok(checks)) {
    err << "verification failed\n";
    return 2;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact round-and-bipartize toolkit for weighted vertex cover"};
  app.require_subcommand(1);

  std::string instance_path, report_path, out_path;
  bool auto_color = false, greedy_bipartize = false, self_verify = false;
  int brute_max = OracleBudget{}.max_vertices_exact;
  int limit_cycles = 64;

  auto* analyze_cmd =
      app.add_subcommand("analyze", "round, bipartize and report ratio certificates");
  analyze_cmd->add_option("instance", instance_path, "instance file")->required();
  analyze_cmd->add_flag("--auto-color", auto_color,
                        "pick S via coloring and dual rotation");
  analyze_cmd->add_flag("--greedy-bipartize", greedy_bipartize,
                        "repair S until it bipartizes the graph");
  analyze_cmd->add_flag("--verify", self_verify, "re-check the emitted report");
  analyze_cmd->add_option("--brute-max", brute_max,
                          "largest size solved by brute force");
  analyze_cmd->add_option("-o,--output", out_path, "report file (default stdout)");

  std::string family, alpha_text = "0";
  int cycle_len = 0, count = 1, rho = 2, apex = 0;
  std::vector<int> set_ids;
  std::optional<unsigned long long> seed;
  unsigned long long seed_value = 0;

  auto* generate_cmd =
      app.add_subcommand("generate", "emit a tight instance of a known family");
  generate_cmd
      ->add_option("family", family, "basic|convex|lifted|alpha-rho|alpha-bip")
      ->required();
  generate_cmd->add_option("--cycle,--len", cycle_len, "odd cycle length");
  generate_cmd->add_option("--count", count, "number of glued cycles (convex)");
  generate_cmd->add_option("--set", set_ids, "independent set, 1-based (lifted)");
  generate_cmd->add_option("--alpha", alpha_text, "alpha as num/den");
  generate_cmd->add_option("--rho", rho, "bound parameter rho >= 2");
  auto* seed_opt = generate_cmd->add_option("--seed", seed_value, "random lambda seed");
  generate_cmd->add_option("--limit-cycles", limit_cycles,
                           "cap for cycle enumeration");
  generate_cmd->add_option("-o,--output", out_path, "instance file (default stdout)");

  auto* fcn_cmd = app.add_subcommand(
      "fcn", "fractional chromatic number certificates and integrality gap");
  fcn_cmd->add_option("instance", instance_path, "instance file")->required();
  fcn_cmd->add_option("--apex", apex, "vertex whose removal bipartizes, 1-based");
  fcn_cmd->add_flag("--verify", self_verify, "re-check the emitted report");
  fcn_cmd->add_option("--brute-max", brute_max,
                      "largest size checked against enumeration");
  fcn_cmd->add_option("-o,--output", out_path, "report file (default stdout)");

  auto* verify_cmd =
      app.add_subcommand("verify", "re-check a report against its instance");
  verify_cmd->add_option("instance", instance_path, "instance file")->required();
  verify_cmd->add_option("report", report_path, "report file")->required();
  verify_cmd->add_option("--brute-max", brute_max,
                         "largest size solved by brute force");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 3;
  }
  if (seed_opt->count() > 0) seed = seed_value;

  try {
    if (analyze_cmd->parsed()) {
      return cmd_analyze(instance_path, auto_color, greedy_bipartize, self_verify,
                         brute_max, out_path, out, err);
    }
    if (generate_cmd->parsed()) {
      return cmd_generate(family, cycle_len, count, set_ids, alpha_text, rho,
                          seed, limit_cycles, out_path, out);
    }
    if (fcn_cmd->parsed()) {
      return cmd_fcn(instance_path, apex, self_verify, brute_max, out_path, out, err);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(instance_path, report_path, brute_max, out, err);
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    if (generate_cmd->parsed()) return 3;
    return e.code() == Errc::ParseError ? 3 : 2;
  }
  return 3;
}

}  // namespace vcb::cli
