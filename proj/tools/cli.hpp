#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace multinet::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,               // bad flags, unparsable input, schema violations
    kPlaneInArrangement = 2,  // the requested plane belongs to Q_n
    kCheckFailed = 3,         // verification or a reproduction check failed
};

/// Runs one command line (without the program name) against the given streams.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace multinet::cli
