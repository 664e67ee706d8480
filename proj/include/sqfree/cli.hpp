#pragma once

// Batch front end. A job bundle is a JSON object
//   {"semigroup": ..., "coefficients": ..., "cocycle": ... (optional),
//    "bounds": ... (optional), "target"/"witness"/"cochain": ... (per command)}
// read from a file or standard input. Reports are JSON on `out`, diagnostics
// go to `err`.

#include <iosfwd>
#include <string>
#include <vector>

namespace sqfree::cli {

enum ExitCode : int {
  Success = 0,
  Negative = 1,       // well-formed negative result
  InputError = 2,
  BoundExceeded = 3,
  InternalError = 4,  // a self-check inside the library failed
};

/// args excludes the program name, e.g. {"h1", "bundle.json", "--timing"}.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sqfree::cli
