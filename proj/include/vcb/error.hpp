#pragma once

#include <stdexcept>
#include <string>

namespace vcb {

enum class Errc {
  InvalidSet,
  InvalidSolution,
  DegenerateWeights,
  NoEdges,
  NotBipartite,
  NotBipartizing,
  InvalidCycle,
  InvalidCombination,
  NotIndependent,
  InvalidParams,
  NoOddCycle,
  UnnormalizedDual,
  InvalidRho,
  TooFewColors,
  NotInQW,
  NotNearBipartite,
  InvalidColoring,
  InvalidFcn,
  TooLarge,
  BipartiteContraction,
  ParseError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace vcb
