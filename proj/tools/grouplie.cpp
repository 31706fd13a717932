#include <iostream>

#include "grouplie/cli.hpp"

int main(int argc, char** argv) { return grouplie::cli_main(argc, argv, std::cout, std::cerr); }
