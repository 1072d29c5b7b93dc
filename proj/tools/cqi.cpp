#include <iostream>

#include "cqi/cli.hpp"

int main(int argc, char** argv) { return cqi::run_cli(argc, argv, std::cout, std::cerr); }
