#include <iostream>

#include "antonim/cli.hpp"

int main(int argc, char** argv) { return antonim::cli::run(argc, argv, std::cout, std::cerr); }
