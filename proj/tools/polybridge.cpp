#include <iostream>

#include "polybridge/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return polybridge::cli::run_command_line(argc, argv, {std::cin, std::cout, std::cerr});
}
