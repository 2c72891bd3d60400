#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qgkit::cli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kViolations = 1;
inline constexpr int kInputError = 2;

// Runs one command line (without the program name). Reports and emitted
// documents go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgkit::cli
