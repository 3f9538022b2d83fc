/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <zsschur/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return zsschur::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
