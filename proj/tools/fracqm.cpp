#include <iostream>

#include "fracqm/cli.hpp"

int main(int argc, char** argv) { return fracqm::cli::main_entry(argc, argv, std::cout, std::cerr); }
