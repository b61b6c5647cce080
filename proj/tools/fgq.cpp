#include <iostream>
#include <string>
#include <vector>

#include "fgq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fgq::cli::run(args, std::cout, std::cerr, std::cin);
}
