// Conric - stabilizing cone-preserving solutions of nonsymmetric Riccati equations
// Copyright 2026 Conric Contributors
// Licensed under Apache 2.0

#include <string>
#include <vector>

#include "conric/cli.hpp"

int main(int argc, char** argv) {
    return conric::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
