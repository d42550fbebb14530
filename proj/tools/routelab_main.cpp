#include <iostream>

#include "routelab/cli.hpp"

int main(int argc, char** argv) { return routelab::run_cli(argc, argv, std::cout, std::cerr); }
