#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace markov12 {

// Exit codes: 0 success, 1 semantic failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace markov12
