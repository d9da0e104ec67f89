#include "flncs/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return flncs::cli::run(argc, argv, std::cout, std::cerr); }
