#include <iostream>

#include "vinc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return vinc::run_cli(args, std::cout, std::cerr, std::cin);
}
