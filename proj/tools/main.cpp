#include <iostream>

#include "gkm2/cli.hpp"

int main(int argc, char** argv) { return gkm2::cli::run(argc, argv, std::cout, std::cerr); }
