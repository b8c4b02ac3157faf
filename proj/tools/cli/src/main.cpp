#include <iostream>

#include "griddom/cli/commands.hpp"

int main(int argc, char ** argv)
{
    return griddom::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
