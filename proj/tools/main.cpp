#include "descartes/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return descartes::run_cli(argc, argv, std::cout, std::cerr); }
