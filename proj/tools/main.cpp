#include <iostream>
#include <string>
#include <vector>

#include "ncdisc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ncdisc::run_cli(args, std::cout, std::cerr);
}
