#include "cli.hpp"

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return homoglab::cli::run(argc, argv, std::cout, std::cerr);
}
