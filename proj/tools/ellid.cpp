#include <iostream>

#include "ellid/cli.hpp"

int main(int argc, char** argv) { return ellid::run_cli(argc, argv, std::cout, std::cerr); }
