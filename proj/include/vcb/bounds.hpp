#pragma once

#include <optional>
#include <span>

#include "vcb/bipartize.hpp"

namespace vcb {

enum class CaseTag { SingleVertex, IndependentSet, GeneralOdd, GeneralBipartite };
enum class OptMode { BruteExact, LPLowerBound };

const char* case_tag_name(CaseTag tag);
const char* opt_mode_name(OptMode mode);

// The main output record: the case split, the theoretical ratio bound for
// (rho, alpha) and the ratio the rounding actually achieved. Bound fields
// are only populated when a dual certifies that the weights lie in Q^W.
struct RatioReport {
  std::optional<int> rho;
  std::optional<Rational> alpha;
  std::optional<CaseTag> case_tag;
  std::optional<Rational> bound;
  Rational achieved;
  OptMode opt_mode = OptMode::LPLowerBound;
  bool bound_applicable = false;
  RoundReport round;
  std::optional<DualSolution> dual;  // the certifying dual that was used
};

// alpha = y(E[S]), the dual mass on edges inside S. Requires y(E) = 1.
Rational compute_alpha(const DualSolution& dual, std::span<const VertexId> s,
                       const Graph& g);

// (1 + 1/rho)(1 - alpha) + 2 alpha when the contraction has odd girth
// 2 rho - 1; the bipartite-contraction case interpolates as 1 + alpha.
Rational theoretical_bound(std::optional<int> rho, const Rational& alpha);

// Runs the full rounding on the normalized instance and assembles the
// report. A provided dual is rescaled along with the normalization and must
// certify the weights; without one, dual recovery is attempted, and if the
// weights are outside Q^W only the achieved ratio against the LP lower
// bound is reported.
RatioReport analyze(const Graph& g, std::span<const VertexId> s,
                    const std::optional<DualSolution>& dual = {},
                    const OracleBudget& budget = {});

}  // namespace vcb
