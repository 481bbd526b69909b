#include <iostream>
#include <string>
#include <vector>

#include "qlrc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qlrc::run_cli(args, std::cout, std::cerr);
}
