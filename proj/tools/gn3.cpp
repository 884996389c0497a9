#include <iostream>
#include <string>
#include <vector>

#include "gn3/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gn3::cli::run(args, std::cin, std::cout, std::cerr);
}
