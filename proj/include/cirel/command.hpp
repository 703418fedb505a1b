#pragma once

#include <string>
#include <vector>

namespace cirel {

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

// Runs one CLI invocation (argv without the program name). Exit codes:
// 0 success, 1 parse or usage error, 2 guard or budget exceeded,
// 3 verification failure.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace cirel
