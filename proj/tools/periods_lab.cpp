#include "periods/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return periods::cli::run(argc, argv, std::cout, std::cerr); }
