#include <iostream>

#include "trifree/cli.hpp"

int main(int argc, char** argv) { return trifree::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
