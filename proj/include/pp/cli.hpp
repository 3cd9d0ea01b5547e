#pragma once

#include <string>
#include <vector>

namespace pp {

struct CommandResult {
    int status = 0;   // 0 ok, 1 invalid input, 2 oracle mismatch
    std::string out;  // document for stdout
    std::string err;  // diagnostics for stderr
};

// args excludes the program name, e.g. {"series", "problem.json", "--space", "full"}.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace pp
