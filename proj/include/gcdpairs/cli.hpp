#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gcdpairs::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kVerificationFailed = 3 };

/// Largest modulus accepted by `graph` (the edge list is quadratic in n).
inline constexpr unsigned long long kMaxGraphOrder = 4096;

/// Runs `gcdpairs <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcdpairs::cli
