#include <iostream>

#include "cyclofactor/cli.hpp"

int main(int argc, char** argv) { return cyclofactor::cli::main_entry(argc, argv, std::cout, std::cerr); }
