#include <iostream>

#include "shapelab/cli.hpp"

int main(int argc, char** argv) { return shapelab::run_cli(argc, argv, std::cout, std::cerr); }
