#include <iostream>
#include <vector>

#include "fewnomial/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fewnomial::run_cli(std::move(args), std::cout, std::cerr);
}
