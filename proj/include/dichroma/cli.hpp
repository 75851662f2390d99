#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dichroma {

/// Runs one CLI invocation. `args` excludes the program name.
/// Exit codes: 0 success (colouring produced / pattern absent / verification
/// passed), 1 witness found or verification failed, 2 usage or parse error,
/// 3 internal error.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dichroma
