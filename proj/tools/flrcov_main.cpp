#include "flrcov/cli.hpp"

#include <exception>
#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const flrcov::cli::RunConfig cfg = flrcov::cli::parse_config(args);
        return flrcov::cli::run(cfg);
    } catch (const flrcov::cli::CliExit& e) {
        (e.code == 0 ? std::cout : std::cerr) << e.message << std::endl;
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
}
