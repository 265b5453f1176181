#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qseries::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Largest n for which crank/rank tables are built by full enumeration.
inline constexpr int kEnumerationCap = 60;

inline constexpr const char* kFormatVersion = "1";

/// Runs one command line (without the program name). Payload goes to `out`,
/// diagnostics to `err`. Returns 0 on success or pass, 1 when a
/// verification fails, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qseries::cli
