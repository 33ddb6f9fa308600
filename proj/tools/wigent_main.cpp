#include <iostream>

#include "wigent/cli/commands.hpp"

int main(int argc, char** argv) { return wigent::cli::run(argc, argv, std::cout, std::cerr); }
