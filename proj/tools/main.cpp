#include <iostream>
#include <string>
#include <vector>

#include "creals/cliapp.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return creals::run_cli(args, std::cout, std::cerr);
}
