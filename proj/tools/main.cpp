#include <iostream>

#include "gorenstein/cli.hpp"

int main(int argc, char** argv) { return gorenstein::cli::run(argc, argv, std::cout, std::cerr); }
