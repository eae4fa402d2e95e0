#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace llv::cli {

/// Exit codes: 0 pass, 1 a check failed, 2 usage or input error, 3 internal error.
enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kInternal = 3 };

/// Name of the environment variable that sets the default orbit ceiling.
inline constexpr const char* kCeilingEnv = "LLV_ORBIT_CEILING";

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace llv::cli
