#include <iostream>

#include "tempdual/cli.hpp"

int main(int argc, char** argv) { return tempdual::cli::run(argc, argv, std::cout, std::cerr); }
