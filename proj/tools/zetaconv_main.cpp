#include <iostream>

#include "zc/cli.hpp"

int main(int argc, char** argv) { return zc::cli_main(argc, argv, std::cout, std::cerr); }
