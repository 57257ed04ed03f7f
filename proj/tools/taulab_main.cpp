#include "taulab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return taulab::cli_main(argc, argv, std::cout, std::cerr); }
