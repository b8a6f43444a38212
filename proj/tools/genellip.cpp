#include <iostream>

#include "genellip/cli.hpp"

int main(int argc, char** argv) { return genellip::cli::run(argc, argv, std::cout, std::cerr); }
