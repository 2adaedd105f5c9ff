#include "wronsk/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const wronsk::CliResult result = wronsk::run_cli(args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
