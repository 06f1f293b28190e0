// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#include <iostream>
#include <string>
#include <vector>

#include "cfp/cli.hpp"

int main(int argc, char** argv) {
    return cfp::cli::run(std::vector<std::string>(argv, argv + argc), std::cout,
                         std::cerr);
}
