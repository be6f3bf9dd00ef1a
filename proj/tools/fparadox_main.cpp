#include <iostream>

#include "fparadox/cli.hpp"

int main(int argc, char** argv) { return fparadox::run_cli(argc, argv, std::cout, std::cerr); }
