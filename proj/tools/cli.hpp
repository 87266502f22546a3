// Command-line surface. run_cli is a library entry point so the tests can
// drive the tool in-process; main() is a thin wrapper.
#ifndef NSEMI_CLI_HPP
#define NSEMI_CLI_HPP

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace nsemi::cli {

// Exit codes: 0 success, 1 input error, 2 identity violation detected,
// 3 internal bound overrun.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Accepts "3,4,5", "<3,4,5>" and the angle-bracket form copied from print.
std::vector<std::int64_t> parse_generator_list(const std::string& text);

}  // namespace nsemi::cli

#endif
