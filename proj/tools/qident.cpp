#include <iostream>

#include "qident/cli.hpp"

int main(int argc, char** argv) { return qident::run_cli(argc, argv, std::cout, std::cerr); }
