#include <iostream>

#include "lagfe/cli.hpp"

int main(int argc, char** argv) { return lagfe::run_cli(argc, argv, std::cout, std::cerr); }
