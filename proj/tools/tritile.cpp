#include <iostream>

#include "tritile/cli.hpp"

int main(int argc, char** argv) { return tritile::run_cli(argc, argv, std::cout, std::cerr); }
