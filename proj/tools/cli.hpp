#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pd::cli {

// Runs the command line with output to out/err. Returns the exit code:
// 0 ok, 1 invalid input, 2 internal failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Worker count for scans: PLATDIAG_JOBS if set and positive, else hardware threads.
unsigned scan_jobs();

}  // namespace pd::cli
