#include <iostream>

#include "app.h"

int main(int argc, char** argv) { return subsum::cli::run_cli(argc, argv, std::cout, std::cerr); }
