#include <iostream>

#include "ppfq/cli.hpp"

int main(int argc, char** argv) { return ppfq::run(argc, argv, std::cout, std::cerr); }
