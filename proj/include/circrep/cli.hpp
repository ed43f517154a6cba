#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circrep::cli {

// Exit codes: 0 success, 1 usage or I/O error, 2 mathematical failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMath = 2;

// argv[0] is the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

// CIRCREP_GRID overrides the default grid and bin count (4096).
int default_grid();

}  // namespace circrep::cli
