#include <iostream>
#include <string>
#include <vector>

#include "tlat/cli.hpp"

int main(int argc, char** argv) {
    return tlat::cli::dispatch(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                               std::cerr);
}
