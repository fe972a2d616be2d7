#include <iostream>
#include <string>
#include <vector>

#include "polyschur/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return polyschur::run(args, std::cout, std::cerr);
}
