#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vcb::cli {

// Command dispatch used by the vcb binary and the tests. Exit codes:
// 0 success, 2 structural failure (non-bipartizing set, failed
// verification), 3 parse or parameter errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace vcb::cli
