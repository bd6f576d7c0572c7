#include "meshpoly/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return meshpoly::cli_main(argc, argv, std::cout, std::cerr); }
