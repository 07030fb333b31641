#include "jetdiff/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return jetdiff::run_cli(argc, argv, std::cout, std::cerr); }
