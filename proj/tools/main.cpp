#include "superaff/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return superaff::cli::main(argc, argv, std::cout, std::cerr);
}
