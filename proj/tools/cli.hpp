#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace codebounds::cli {

/// Runs one command line (without the program name). Exit codes: 0 success
/// or verified, 1 refuted, 2 input error, refusal or exhausted budget.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace codebounds::cli
