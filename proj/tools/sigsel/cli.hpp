#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigsel::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;   // bad flags, unreadable or malformed files
inline constexpr int kExitDomain = 2;  // inputs parsed but failed validation

// Entry point shared by main() and the tests. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigsel::cli
