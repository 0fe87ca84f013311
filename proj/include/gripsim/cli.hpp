#pragma once

namespace gripsim {

// Full command-line front end. Exit codes: 0 success, 2 configuration or
// input error, 3 requested result is infeasible, 4 internal error.
int run_cli(int argc, const char* const* argv);

} // namespace gripsim
