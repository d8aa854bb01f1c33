#include <iostream>
#include <string>
#include <vector>

#include "indpoly/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return indpoly::cli_run(args, std::cout, std::cerr);
}
