#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flopcalc::cli {

enum ExitCode { kOk = 0, kDomain = 1, kBudget = 2, kUsage = 3 };

/// args excludes the program name. Records go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flopcalc::cli
