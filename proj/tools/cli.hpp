#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sfc::cli {

// args excludes the program name. Returns 0 on success, 1 when the instance
// is infeasible and 2 on input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sfc::cli
