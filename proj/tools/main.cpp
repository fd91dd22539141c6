#include <iostream>

#include "dstretch/cli.hpp"

int main(int argc, char** argv) { return dstretch::run_cli(argc, argv, std::cout, std::cerr); }
