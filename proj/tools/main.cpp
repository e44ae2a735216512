#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    qfe::cli::CliConfig cfg;
    if (auto code = qfe::cli::parse_args(argc, argv, cfg, std::cout, std::cerr)) return *code;
    return qfe::cli::run_command(cfg, std::cout, std::cerr);
}
