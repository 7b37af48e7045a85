#include "modrat/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return modrat::cli::main_entry(args, std::cin, std::cout, std::cerr);
}
