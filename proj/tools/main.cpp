#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return subdiv::cli::run_cli(argc, argv, std::cout, std::cerr); }
