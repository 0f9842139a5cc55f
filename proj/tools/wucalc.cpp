#include <iostream>

#include "wucalc/cli.hpp"

int main(int argc, char** argv) { return wucalc::run_command(argc, argv, std::cout, std::cerr); }
