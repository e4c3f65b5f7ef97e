#include <iostream>
#include <string>
#include <vector>

#include "apsp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return apsp::run(args, std::cout, std::cerr);
}
