#include <iostream>

#include "eigenstrata/cli/commands.hpp"

int main(int argc, char** argv) {
    return eigenstrata::cli::run_cli(argc, argv, std::cout, std::cerr);
}
