#include "chipfire/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return chipfire::run_cli(argc, argv, std::cout, std::cerr);
}
