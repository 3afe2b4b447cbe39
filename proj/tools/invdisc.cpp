#include <iostream>

#include "invdisc/cli.hpp"

int main(int argc, char** argv) { return invdisc::cli::run(argc, argv, std::cout, std::cerr); }
