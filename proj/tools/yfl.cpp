#include <iostream>

#include "yfl/cli.hpp"

int main(int argc, char** argv) { return yfl::cli::run(argc, argv, std::cout, std::cerr); }
