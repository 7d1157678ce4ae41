#include "duoidal/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return duoidal::run(argc, argv, std::cout, std::cerr); }
