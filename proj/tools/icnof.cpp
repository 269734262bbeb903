#include <iostream>

#include "icnof/cli.hpp"

int main(int argc, char** argv) { return icnof::cli::run(argc, argv, std::cout, std::cerr); }
