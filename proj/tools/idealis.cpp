#include <iostream>

#include "idealis/cli.hpp"

int main(int argc, char** argv) { return idealis::run_cli(argc, argv, std::cout, std::cerr); }
