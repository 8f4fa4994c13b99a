#include <iostream>

#include "latdeg/cli/commands.hpp"

int main(int argc, char** argv) { return latdeg::run_cli(argc, argv, std::cout, std::cerr); }
