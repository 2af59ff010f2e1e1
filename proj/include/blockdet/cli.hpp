#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blockdet::cli {

inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kUsageError = 2;

/// Runs one command. `args` excludes the program name. Returns 0 on success or
/// when the checked property holds, 1 when it fails (report on `out`), 2 on usage,
/// parse or I/O errors (message on `err`).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace blockdet::cli
