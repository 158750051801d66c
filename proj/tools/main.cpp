#include <iostream>
#include <string>
#include <vector>

#include "sigloc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return sigloc::cli::run(args, std::cout, std::cerr);
}
