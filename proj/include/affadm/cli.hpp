#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace affadm::cli {

enum ExitCode { kPass = 0, kCheckFailure = 1, kUsage = 2 };

/// Runs one command; args excludes the program name. Reports go to out, errors to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affadm::cli
