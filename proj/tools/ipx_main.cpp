#include <iostream>

#include "ipx/cli.hpp"

int main(int argc, char** argv) { return ipx::run_cli(argc, argv, std::cout, std::cerr); }
