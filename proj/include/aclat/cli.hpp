#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace aclat::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kParseError = 2 };

/// Runs one verb. `args` excludes the program name. Reports go to `out`;
/// failures print the error name alone on the first line of `err`, then the
/// detail. Returns 0 on success, 1 on domain errors and 2 on parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aclat::cli
