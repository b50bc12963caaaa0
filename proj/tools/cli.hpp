#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scknot::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kDomain = 3;
inline constexpr int kResource = 4;
inline constexpr int kInternal = 5;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scknot::cli
