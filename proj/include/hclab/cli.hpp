#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hclab::cli {

/// Exit codes: 0 all checks pass, 1 a check failed (report still written),
/// 2 the command line, config or certificate could not be parsed.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kParseError = 2;

/// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnv = "HCLAB_OUT_DIR";

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hclab::cli
