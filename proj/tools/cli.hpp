#pragma once

#include <iosfwd>

namespace gsc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the gsc binary and the tests. Data goes to `out`,
/// progress, counts and diagnostics to `err`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gsc::cli
