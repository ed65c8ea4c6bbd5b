#include <iostream>

#include "ssli_lab/commands.hpp"

int main(int argc, char** argv) { return ssli::lab::run(argc, argv, std::cout, std::cerr); }
