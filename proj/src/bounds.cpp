#include "vcb/bounds.hpp"

#include "vcb/error.hpp"

namespace vcb {

const char* case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::SingleVertex: return "SingleVertex";
    case CaseTag::IndependentSet: return "IndependentSet";
    case CaseTag::GeneralOdd: return "GeneralOdd";
    case CaseTag::GeneralBipartite: return "GeneralBipartite";
  }
  return "Unknown";
}

const char* opt_mode_name(OptMode mode) {
  return mode == OptMode::BruteExact ? "BruteExact" : "LPLowerBound";
}

Rational compute_alpha(const DualSolution& dual, std::span<const VertexId> s,
                       const Graph& g) {
  if (static_cast<int>(dual.values.size()) != g.edge_count())
    fail(Errc::InvalidParams, "dual size does not match edge count");
  if (dual.total != 1)
    fail(Errc::UnnormalizedDual, "dual values must sum to one");
  const auto split = boundary_and_inside(g, s);
  Rational alpha = 0;
  for (EdgeId e : split.inside) alpha += dual.values[e];
  return alpha;
}

Rational theoretical_bound(std::optional<int> rho, const Rational& alpha) {
  if (alpha < 0 || alpha > 1)
    fail(Errc::InvalidParams, "alpha must lie in [0, 1]");
  if (!rho) return 1 + alpha;
  if (*rho < 2) fail(Errc::InvalidRho, "rho must be at least 2");
  const Rational keep = 1 - alpha;
  return (1 + Rational(1, *rho)) * keep + 2 * alpha;
}

RatioReport analyze(const Graph& g, std::span<const VertexId> s,
                    const std::optional<DualSolution>& dual,
                    const OracleBudget& budget) {
  const Rational total = g.total_weight();
  const Graph gn = normalize(g);
  const auto set = canonical_set(gn, s);

  RatioReport report;
  report.round = round_and_bipartize(gn, set, budget);

  std::optional<DualSolution> y;
  if (dual) {
    // Rescale the provided dual along with the weight normalization.
    const Rational scale = Rational(2) / total;
    std::vector<Rational> values = dual->values;
    for (auto& value : values) value *= scale;
    y = make_dual(gn, std::move(values));
    if (!dual_is_tight(gn, *y))
      fail(Errc::NotInQW, "provided dual does not certify the weights");
  } else {
    y = recover_dual(gn);
  }

  if (!y) {
    report.bound_applicable = false;
    report.opt_mode = OptMode::LPLowerBound;
    if (report.round.lp_value == 0)
      fail(Errc::DegenerateWeights, "LP lower bound is zero");
    report.achieved = report.round.cover_weight / report.round.lp_value;
    return report;
  }

  report.dual = y;
  report.alpha = compute_alpha(*y, set, gn);
  if (set.empty()) {
    report.case_tag = CaseTag::GeneralBipartite;
  } else {
    const auto ct = contract(gn, set);
    if (const auto girth = odd_girth(ct.graph)) {
      report.rho = (girth->length + 1) / 2;
      if (set.size() == 1) report.case_tag = CaseTag::SingleVertex;
      else if (is_independent_set(gn, set)) report.case_tag = CaseTag::IndependentSet;
      else report.case_tag = CaseTag::GeneralOdd;
    } else {
      report.case_tag = CaseTag::GeneralBipartite;
    }
  }
  report.bound = theoretical_bound(report.rho, *report.alpha);
  report.bound_applicable = true;
  report.achieved = report.round.achieved;
  report.opt_mode =
      report.round.opt_exact ? OptMode::BruteExact : OptMode::LPLowerBound;
  return report;
}

}  // namespace vcb
