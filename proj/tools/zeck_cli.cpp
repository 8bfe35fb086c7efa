#include "zeck/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return zeck::run_cli(argc, argv, std::cout, std::cerr); }
