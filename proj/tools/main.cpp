#include <iostream>
#include <string>
#include <vector>

#include "hserre/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hserre::cli::run(args, std::cout, std::cerr);
}
