#include <iostream>

#include "modcat/cli/commands.hpp"

int main(int argc, char** argv) { return modcat::cli::run(argc, argv, std::cout, std::cerr); }
