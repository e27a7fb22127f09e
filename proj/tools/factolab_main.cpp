#include <iostream>

#include "factolab/cli.hpp"

int main(int argc, char** argv) { return factolab::cli::run(argc, argv, std::cout, std::cerr); }
