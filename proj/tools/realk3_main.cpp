#include <iostream>

#include "realk3/cli.hpp"

int main(int argc, char** argv) { return realk3::run_cli(argc, argv, std::cout, std::cerr); }
