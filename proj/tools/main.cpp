#include <iostream>

#include "schurlab/cli.hpp"

int main(int argc, char** argv) { return schurlab::run_cli(argc, argv, std::cout, std::cerr); }
