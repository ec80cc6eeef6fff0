#include <iostream>

#include "cde/cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cde::cli::run(args, std::cout, std::cerr);
}
