#include <iostream>

#include "lcasc/cli.hpp"

int main(int argc, char** argv) { return lcasc::run_cli(argc, argv, std::cout, std::cerr); }
