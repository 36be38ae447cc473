#include <iostream>

#include "lambdap/cli.hpp"

int main(int argc, char** argv) {
    try {
        return lambdap::cli::run(argc, argv, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << "\n";
        return lambdap::cli::kExitUsage;
    }
}
