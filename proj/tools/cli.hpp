#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pfmk {

// Exit codes: 0 success or answer-yes, 1 answer-no, 2 usage or parse
// error, 3 internal invariant violation.
constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_usage = 2;
constexpr int exit_internal = 3;

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pfmk
