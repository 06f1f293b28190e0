// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cfp/core.hpp"

namespace testfix {

// 5 x 7 demo instance used across the suites, with its reference three-cell
// solution and the values each solver must reproduce.
inline cfp::BoolMatrix table1_matrix() {
    return cfp::BoolMatrix(5, 7,
                           {1, 0, 1, 0, 0, 1, 1,
                            1, 1, 1, 0, 0, 0, 0,
                            1, 0, 1, 0, 1, 0, 1,
                            1, 1, 0, 1, 1, 0, 1,
                            1, 1, 1, 1, 1, 0, 0});
}

inline cfp::CfpInstance table1() { return cfp::CfpInstance(table1_matrix()); }

inline cfp::CfpSolution table2_solution() {
    return cfp::CfpSolution({2, 0, 1, 0, 0}, {0, 0, 0, 1, 1, 2, 2});
}

// table1 + table2: n1 = 21, e = 10, v = 2, f1 = 12, efficacy = 11/23.
// optima: min f1 = 8, max efficacy = 17/26.
inline constexpr std::int64_t kTable1N1 = 21;
inline constexpr std::int64_t kTable1E = 10;
inline constexpr std::int64_t kTable1V = 2;
inline constexpr std::int64_t kTable1F1 = 12;
inline constexpr std::int64_t kTable1F2Num = 11;
inline constexpr std::int64_t kTable1F2Den = 23;
inline constexpr std::int64_t kTable1F1Opt = 8;
inline constexpr std::int64_t kTable1F2OptNum = 17;
inline constexpr std::int64_t kTable1F2OptDen = 26;

// extension of table1: block 35, extended n1 = 21 + 1225 = 1246; the lift
// of the table2 solution scores e = 10, v = 2, efficacy 1236/1248 = 103/104;
// threshold transform of c = 12 is 1234/1246 = 617/623.
inline constexpr std::int64_t kTable1LiftNum = 103;
inline constexpr std::int64_t kTable1LiftDen = 104;
inline constexpr std::int64_t kTable1ThresholdC = 12;
inline constexpr std::int64_t kTable1ThresholdNum = 617;
inline constexpr std::int64_t kTable1ThresholdDen = 623;

// Deterministic random instances for property suites. Density is
// dense-ish so small matrices rarely degenerate to all-zero.
inline cfp::BoolMatrix random_matrix(std::mt19937_64& rng, int m, int p,
                                     int num = 1, int den = 2) {
    std::vector<std::uint8_t> data(static_cast<std::size_t>(m) * p);
    for (auto& cell : data) {
        cell = rng() % static_cast<std::uint64_t>(den) <
                       static_cast<std::uint64_t>(num)
                   ? 1
                   : 0;
    }
    return cfp::BoolMatrix(m, p, std::move(data));
}

inline cfp::CfpInstance random_instance(std::mt19937_64& rng, int m, int p) {
    return cfp::CfpInstance(random_matrix(rng, m, p));
}

// All 0/1 matrices of the given shape, by binary counting over row-major
// entries; index 0 is the zero matrix.
inline cfp::BoolMatrix nth_matrix(int m, int p, std::uint64_t index) {
    std::vector<std::uint8_t> data(static_cast<std::size_t>(m) * p);
    for (std::size_t k = 0; k < data.size(); ++k) {
        data[k] = (index >> k) & 1;
    }
    return cfp::BoolMatrix(m, p, std::move(data));
}

// Uniform random valid solution for an instance.
inline cfp::CfpSolution random_solution(std::mt19937_64& rng,
                                        const cfp::CfpInstance& inst) {
    std::vector<std::int32_t> mc(inst.m()), pc(inst.p());
    auto cap = static_cast<std::uint64_t>(inst.cell_bound());
    for (auto& c : mc) c = static_cast<std::int32_t>(rng() % cap);
    for (auto& c : pc) c = static_cast<std::int32_t>(rng() % cap);
    return cfp::CfpSolution(std::move(mc), std::move(pc));
}

}  // namespace testfix
