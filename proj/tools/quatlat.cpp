#include <iostream>

#include "quatlat/cli.hpp"

int main(int argc, char** argv) { return quatlat::run_cli(argc, argv, std::cout, std::cerr); }
