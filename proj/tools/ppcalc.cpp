#include <iostream>

#include "pp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    pp::CommandResult r = pp::run_command(args);
    std::cout << r.out;
    std::cerr << r.err;
    return r.status;
}
