#pragma once

#include <ostream>

namespace gorenstein::cli {

/// Runs one subcommand and writes its JSON document to `out`. Exit codes:
/// 0 success, 1 property fails, 2 malformed input, 3 verification failure,
/// 4 internal contradiction (witness on `err`).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gorenstein::cli
