#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv)
{
    return pfspec::cli::runCli(argc, argv, std::cout, std::cerr);
}
