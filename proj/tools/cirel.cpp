#include <cstdio>
#include <string>
#include <vector>

#include "cirel/command.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    cirel::CommandResult result = cirel::run_command(args);
    std::fputs(result.out.c_str(), stdout);
    std::fputs(result.err.c_str(), stderr);
    return result.exit_code;
}
