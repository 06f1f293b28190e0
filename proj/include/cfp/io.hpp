// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

#include "cfp/bgep.hpp"
#include "cfp/core.hpp"
#include "cfp/rational.hpp"

namespace cfp::io {

// Instance text: optional '#' comment lines and blank lines, then a header
// "m p", then m rows of p space-separated 0/1 tokens. Anything after the
// last row other than comments/blanks is rejected. Weights are not part of
// the format; parsing always yields a unit-weight instance with the default
// cell bound.
CfpInstance parse_instance(const std::string& text);
std::string write_instance(const CfpInstance& instance);

// Solution text: three lines "cells K", "machines i0 .. i(m-1)",
// "parts j0 .. j(p-1)". Counts must fit the instance and K must equal the
// number of distinct indices used; whether indices respect the cell bound
// is left to validate().
CfpSolution parse_solution(const std::string& text, const CfpInstance& instance);
std::string write_solution(const CfpSolution& solution);

// Edge list text: header "left right edges" then one "u v" line per edge,
// 0-based, duplicates rejected; written sorted row-major.
bgep::BgepInstance parse_edge_list(const std::string& text);
std::string write_edge_list(const bgep::BgepInstance& graph);

// Random instance: entry (i, j) is set iff rng() % den < num where rng is
// std::mt19937_64 seeded with `seed`, drawn row-major and density = num/den
// normalized. Fully portable: same seed, same matrix, everywhere.
CfpInstance generate(int m, int p, const Rational& density, std::uint64_t seed);

// Whole-file read; InputError (exit 65 at the CLI) when unreadable.
std::string read_file(const std::string& path);

}  // namespace cfp::io
