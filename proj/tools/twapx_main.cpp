#include <iostream>

#include "twapx/cli.hpp"

int main(int argc, char** argv) { return twapx::cli_main(argc, argv, std::cout, std::cerr); }
