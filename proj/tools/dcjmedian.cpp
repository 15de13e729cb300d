#include <iostream>

#include "dcjmedian/cli.hpp"

int main(int argc, char** argv) { return dcjmedian::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
