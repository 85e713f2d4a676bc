#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return fibfractal::cli::run(argc, argv, std::cout, std::cerr); }
