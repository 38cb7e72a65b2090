#include <iostream>

#include "gotz_cli.hpp"

int main(int argc, char **argv)
{
    return gotz::cli::run(argc, argv, std::cout, std::cerr);
}
