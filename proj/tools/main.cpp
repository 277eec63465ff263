#include <iostream>

#include "cuspkit/cli.hpp"

int main(int argc, char** argv) { return cuspkit::run_cli(argc, argv, std::cout, std::cerr); }
