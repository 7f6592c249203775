#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seqdiv::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage or precondition
/// error. Nothing is written to `out` unless the command succeeds.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seqdiv::cli
