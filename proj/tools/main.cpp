#include <iostream>

#include "edgewave/cli.hpp"

int main(int argc, char** argv) { return edgewave::cli::main(argc, argv, std::cout, std::cerr); }
