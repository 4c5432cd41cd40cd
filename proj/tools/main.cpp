#include "crepant/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return crepant::cli::run(argc, argv, std::cout, std::cerr); }
