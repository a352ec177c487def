#include <iostream>
#include <string>
#include <vector>

#include "ngfisk/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return ngfisk::cli::run(args, std::cout, std::cerr);
}
