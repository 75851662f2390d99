#include <iostream>
#include <string>
#include <vector>

#include "dichroma/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return dichroma::cli_dispatch(args, std::cout, std::cerr);
}
