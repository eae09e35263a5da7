#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mlcech::cli {

enum ExitCode : int {
    kOk = 0,
    kSchemaError = 2,
    kMathError = 3,
    kIoError = 4,
};

/// Runs one `mlcech` command. The report goes to `out` (or to --out, written
/// atomically); diagnostics go to `err`. Nothing is written on failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mlcech::cli
