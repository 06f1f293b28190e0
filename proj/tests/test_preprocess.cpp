// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#include "cfp/preprocess.hpp"

#include <random>

#include "cfp/error.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using cfp::BoolMatrix;
using cfp::CfpInstance;
using cfp::CfpSolution;
using cfp::preprocess::merge;
using cfp::preprocess::MergeMap;
using cfp::preprocess::unmerge_solution;

namespace {

// duplicates rows/columns of a pattern so merging has something to do
CfpInstance duplicated_instance(std::mt19937_64& rng, int base_m, int base_p,
                                int m, int p) {
    BoolMatrix pattern = testfix::random_matrix(rng, base_m, base_p);
    BoolMatrix big(m, p);
    std::vector<int> row_of(m), col_of(p);
    for (int i = 0; i < m; ++i) {
        row_of[i] = i < base_m ? i : static_cast<int>(rng() % base_m);
    }
    for (int j = 0; j < p; ++j) {
        col_of[j] = j < base_p ? j : static_cast<int>(rng() % base_p);
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < p; ++j) {
            big.set(i, j, pattern.at(row_of[i], col_of[j]));
        }
    }
    return CfpInstance(std::move(big));
}

}  // namespace

TEST_CASE("merging collapses duplicates, keeps weights and the bound") {
    BoolMatrix a(4, 3,
                 {1, 0, 1,
                  1, 0, 1,
                  0, 1, 1,
                  1, 0, 1});
    CfpInstance inst(std::move(a));
    auto [merged, map] = merge(inst);
    CHECK(merged.m() == 2);
    CHECK(merged.p() == 3);  // columns all distinct
    CHECK(merged.cell_bound() == 3);  // carried from the 4 x 3 original
    CHECK(merged.row_weights() == std::vector<std::int32_t>{3, 1});
    CHECK(merged.col_weights() == std::vector<std::int32_t>{1, 1, 1});
    CHECK(map.row_groups == std::vector<std::vector<std::int32_t>>{{0, 1, 3}, {2}});
    CHECK(merged.n1() == inst.n1());
    CHECK(merged.matrix().at(0, 0) == 1);
    CHECK(merged.matrix().at(1, 0) == 0);

    // identical columns too
    BoolMatrix b(2, 4,
                 {1, 1, 0, 1,
                  0, 0, 1, 0});
    auto [mb, mapb] = merge(CfpInstance(std::move(b)));
    CHECK(mb.p() == 2);
    CHECK(mb.col_weights() == std::vector<std::int32_t>{3, 1});
    CHECK(mapb.col_groups == std::vector<std::vector<std::int32_t>>{{0, 1, 3}, {2}});
}

TEST_CASE("a duplicate-free instance merges to itself") {
    CfpInstance t1 = testfix::table1();
    auto [merged, map] = merge(t1);
    CHECK(merged == t1);
    CHECK(map.row_groups.size() == 5);
    CHECK(map.col_groups.size() == 7);
}

TEST_CASE("unmerge undoes merge on solutions and preserves canonical form") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 60; ++round) {
        CfpInstance inst = duplicated_instance(rng, 2 + static_cast<int>(rng() % 2),
                                               2 + static_cast<int>(rng() % 2),
                                               3 + static_cast<int>(rng() % 3),
                                               3 + static_cast<int>(rng() % 3));
        auto [merged, map] = merge(inst);
        CfpSolution msol = testfix::random_solution(rng, merged);
        CfpSolution full = unmerge_solution(msol, map);
        CHECK(full.machine_cell.size() == static_cast<std::size_t>(inst.m()));
        CHECK(full.part_cell.size() == static_cast<std::size_t>(inst.p()));
        CHECK(cfp::validate(inst, full).empty());
        for (std::size_t g = 0; g < map.row_groups.size(); ++g) {
            for (std::int32_t i : map.row_groups[g]) {
                CHECK(full.machine_cell[i] == msol.machine_cell[g]);
            }
        }
        CfpSolution canon = cfp::canonicalize(msol);
        CHECK(cfp::canonicalize(unmerge_solution(canon, map)) ==
              unmerge_solution(canon, map));
    }
}

TEST_CASE("merged objective equals the original objective") {
    // the identical-row/column argument: co-assigning duplicates loses
    // nothing, and the weighted merged instance scores them in bulk
    std::mt19937_64 rng(29);
    for (int round = 0; round < 60; ++round) {
        CfpInstance inst = duplicated_instance(rng, 2, 2, 4, 5);
        auto [merged, map] = merge(inst);
        CfpSolution msol = testfix::random_solution(rng, merged);
        cfp::ObjectiveReport on_merged = cfp::evaluate(merged, msol);
        cfp::ObjectiveReport on_full = cfp::evaluate(inst, unmerge_solution(msol, map));
        CHECK(on_merged.n1 == on_full.n1);
        CHECK(on_merged.e == on_full.e);
        CHECK(on_merged.v == on_full.v);
    }
}

TEST_CASE("unmerge rejects mismatched solutions") {
    auto [merged, map] = merge(testfix::table1());
    CHECK_THROWS_AS(unmerge_solution(CfpSolution({0}, {0}), map), cfp::DomainError);
}
