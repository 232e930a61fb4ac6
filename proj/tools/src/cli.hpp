#pragma once

#include <iosfwd>

namespace bvisco::cli {

enum ExitCode : int { ok = 0, validation_failed = 1, error = 2 };

/// Entry point of the `bvisco` tool. Results go to `out` (or the --output
/// file); errors are written to `err` as a single JSON record.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bvisco::cli
