#include <iostream>

#include "galcoh/cli.hpp"

int main(int argc, char** argv) { return galcoh::run_cli(argc, argv, std::cout, std::cerr); }
