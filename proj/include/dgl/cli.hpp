#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dgl::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
    kOk = 0,
    kParseError = 2,
    kValidationError = 3,
    kNumericalError = 4,
};

/// Runs one command line (args excludes the program name). Reports go to
/// `out` as JSON, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dgl::cli
