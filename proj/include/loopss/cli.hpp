#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loopss {

/// Entry point behind the `loopss` binary, callable in-process for tests.
/// Exit codes: 0 success/PASS, 1 verification FAIL, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args);

}  // namespace loopss
