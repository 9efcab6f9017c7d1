#include <iostream>

#include "critlab/cli.hpp"

int main(int argc, char** argv)
{
    return critlab::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
