#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "ghsimplex/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    ghs::cli::Environment env;
    if (const char* cap = std::getenv("GH_SIMPLEX_CAP")) env.cap = cap;
    return ghs::cli::run(args, std::cout, std::cerr, env);
}
