#include <iostream>

#include "qcount/cli.hpp"

int main(int argc, char** argv) { return qcount::cli::run(argc, argv, std::cout, std::cerr); }
