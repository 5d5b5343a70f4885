#include <iostream>

#include "dynwg/cli.hpp"

int main(int argc, char** argv) { return dynwg::run_cli(argc, argv, std::cout, std::cerr); }
