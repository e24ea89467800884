#include "fordcf/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return fordcf::cli_main(argc, argv, std::cout, std::cerr);
}
