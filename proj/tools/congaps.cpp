#include <iostream>

#include "congaps/cli.hpp"

int main(int argc, char** argv) { return congaps::cli::main(argc, argv, std::cout, std::cerr); }
