#include <iostream>

#include <dalg/cli.hpp>

int main(int argc, char **argv)
{
    return dalg::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}
