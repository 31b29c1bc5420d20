#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coarse {

inline constexpr const char* kVersion = "coarse 1.0.0";

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 user error, 2 inconclusive verdict.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace coarse
