#include <xpow/cli.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = xpow::cli::main_entry(args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.status;
}
