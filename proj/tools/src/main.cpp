#include "liegate_cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return liegate::cli::run(argc, argv, std::cout, std::cerr); }
