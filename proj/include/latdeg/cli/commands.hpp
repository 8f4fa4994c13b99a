#pragma once

#include <iosfwd>

namespace latdeg {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int computation = 2;
}  // namespace exit_code

/// Entry point of the latdeg command line. Results go to `out` (or the file
/// named by --out), diagnostics to `err` as one "latdeg: error: ..." line.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace latdeg
