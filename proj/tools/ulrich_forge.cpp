#include <iostream>

#include "ulrich/cli.hpp"

int main(int argc, char** argv) { return ulrich::run_cli(argc, argv, std::cout, std::cerr); }
