#include <iostream>
#include <string>
#include <vector>

#include "kdyck/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kdyck::cli::run(args, std::cin, std::cout, std::cerr);
}
