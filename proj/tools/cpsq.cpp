#include <iostream>

#include "cpsq/cli.hpp"

int main(int argc, char* argv[]) { return cpsq::run_cli(argc, argv, std::cout, std::cerr); }
