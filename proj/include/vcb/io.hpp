#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vcb/relax.hpp"

namespace vcb {

// In-memory form of the DIMACS-style instance files:
//   c <comment>
//   p vcb <numVertices> <numEdges>
//   v <id> <num>/<den>
//   e <u> <v>
//   s <id> <id> ...
//   y <u> <v> <num>/<den>
// Ids are 1-based in files and dense 0-based in memory. Rationals are
// always written as num/den (integers allowed as shorthand); no decimal
// notation is accepted. For parallel edges, y lines bind to edges with the
// same endpoints in order of appearance.
struct Instance {
  Graph graph;
  std::optional<std::vector<VertexId>> s;
  std::optional<DualSolution> dual;
};

Instance parse_instance(std::istream& in);
Instance parse_instance_file(const std::string& path);
Instance parse_instance_text(const std::string& text);

void serialize_instance(const Instance& instance, std::ostream& out);
std::string serialize_instance(const Instance& instance);

}  // namespace vcb
