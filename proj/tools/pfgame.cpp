#include <iostream>

#include "pfgame/cli.hpp"

int main(int argc, char** argv) { return pfgame::run_cli(argc, argv, std::cout, std::cerr); }
