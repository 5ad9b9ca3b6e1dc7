#pragma once

#include <iosfwd>

namespace pfgame {

/// Exit codes: 0 success, 1 input error, 2 nonconvergence or undetermined.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pfgame
