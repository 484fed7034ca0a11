#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dcs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitVerifyFailed = 3;

// Runs one verb. Results go to `out`, diagnostics to `err`.
// Exit codes: 0 ok; 1 usage or input error; 2 domain/resource/search error;
// 3 verification failure.
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int parse_and_dispatch(const std::vector<std::string>& args);

}  // namespace dcs::cli
