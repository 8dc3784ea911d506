#include <fstream>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const auto outcome = segbounds::cli::run(args);
    std::cerr << outcome.diagnostics;
    if (outcome.out_path.empty()) {
        std::cout << outcome.output;
    } else {
        std::ofstream out(outcome.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open " << outcome.out_path << "\n";
            return segbounds::cli::usage;
        }
        out << outcome.output;
    }
    return outcome.exit_code;
}
