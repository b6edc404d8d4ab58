#include <iostream>

#include "qutrit_cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qutrit::cli::run(std::move(args), std::cout, std::cerr);
}
