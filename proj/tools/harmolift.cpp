#include <iostream>

#include "harmolift/cli.hpp"

int main(int argc, char** argv) { return harmolift::run_cli(argc, argv, std::cout, std::cerr); }
