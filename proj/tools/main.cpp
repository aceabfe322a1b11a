#include <iostream>

#include "compoq_cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return compoq::cli::run(args, std::cout, std::cerr);
}
