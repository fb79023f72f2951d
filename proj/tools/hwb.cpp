#include <iostream>

#include "hwb/cli.hpp"

int main(int argc, char** argv) {
    return hwb::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
