#include "vcb/error.hpp"

namespace vcb {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidSet: return "InvalidSet";
    case Errc::InvalidSolution: return "InvalidSolution";
    case Errc::DegenerateWeights: return "DegenerateWeights";
    case Errc::NoEdges: return "NoEdges";
    case Errc::NotBipartite: return "NotBipartite";
    case Errc::NotBipartizing: return "NotBipartizing";
    case Errc::InvalidCycle: return "InvalidCycle";
    case Errc::InvalidCombination: return "InvalidCombination";
    case Errc::NotIndependent: return "NotIndependent";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::NoOddCycle: return "NoOddCycle";
    case Errc::UnnormalizedDual: return "UnnormalizedDual";
    case Errc::InvalidRho: return "InvalidRho";
    case Errc::TooFewColors: return "TooFewColors";
    case Errc::NotInQW: return "NotInQW";
    case Errc::NotNearBipartite: return "NotNearBipartite";
    case Errc::InvalidColoring: return "InvalidColoring";
    case Errc::InvalidFcn: return "InvalidFcn";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BipartiteContraction: return "BipartiteContraction";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace vcb
