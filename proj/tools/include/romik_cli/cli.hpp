#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace romik::cli {

enum ExitCode : int { Ok = 0, DomainFailure = 1, UsageFailure = 2 };

/// Runs one command line. argv[0] is the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace romik::cli
