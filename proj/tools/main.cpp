#include <iostream>

#include "nac/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return nac::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}
