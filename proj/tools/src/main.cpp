#include <iostream>

#include "pasep_cli/cli.hpp"

int main(int argc, char** argv) { return pasep::cli::run(argc, argv, std::cout, std::cerr); }
