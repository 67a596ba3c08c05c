#include <iostream>
#include <string>
#include <vector>

#include "tropfrieze/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tropfrieze::run(args, std::cout, std::cerr);
}
