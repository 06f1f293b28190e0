// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#include "cfp/preprocess.hpp"

#include <cstdint>
#include <map>

#include "cfp/error.hpp"

namespace cfp::preprocess {

namespace {

// first-occurrence grouping of key vectors; returns group index per item
std::vector<std::vector<std::int32_t>> group_identical(
    const std::vector<std::vector<std::uint8_t>>& keys) {
    std::map<std::vector<std::uint8_t>, int> index;
    std::vector<std::vector<std::int32_t>> groups;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        auto [it, fresh] = index.try_emplace(keys[i], static_cast<int>(groups.size()));
        if (fresh) groups.emplace_back();
        groups[it->second].push_back(static_cast<std::int32_t>(i));
    }
    return groups;
}

}  // namespace

std::pair<CfpInstance, MergeMap> merge(const CfpInstance& instance) {
    const BoolMatrix& a = instance.matrix();
    std::vector<std::vector<std::uint8_t>> row_keys(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        row_keys[i].assign(a.row(i), a.row(i) + a.cols());
    }
    std::vector<std::vector<std::uint8_t>> col_keys(a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        col_keys[j].resize(a.rows());
        for (int i = 0; i < a.rows(); ++i) col_keys[j][i] = a.at(i, j);
    }

    MergeMap map;
    map.row_groups = group_identical(row_keys);
    map.col_groups = group_identical(col_keys);
    map.orig_m = a.rows();
    map.orig_p = a.cols();

    int mm = static_cast<int>(map.row_groups.size());
    int mp = static_cast<int>(map.col_groups.size());
    BoolMatrix merged(mm, mp);
    std::vector<std::int32_t> rw(mm, 0);
    std::vector<std::int32_t> cw(mp, 0);
    for (int gi = 0; gi < mm; ++gi) {
        for (std::int32_t i : map.row_groups[gi]) rw[gi] += instance.row_weights()[i];
        for (int gj = 0; gj < mp; ++gj) {
            merged.set(gi, gj, a.at(map.row_groups[gi][0], map.col_groups[gj][0]));
        }
    }
    for (int gj = 0; gj < mp; ++gj) {
        for (std::int32_t j : map.col_groups[gj]) cw[gj] += instance.col_weights()[j];
    }
    return {CfpInstance(std::move(merged), std::move(rw), std::move(cw),
                        instance.cell_bound()),
            map};
}

CfpSolution unmerge_solution(const CfpSolution& merged_solution, const MergeMap& map) {
    if (merged_solution.machine_cell.size() != map.row_groups.size() ||
        merged_solution.part_cell.size() != map.col_groups.size()) {
        throw DomainError("solution dimensions do not match merge map");
    }
    std::vector<std::int32_t> machines(map.orig_m, 0);
    std::vector<std::int32_t> parts(map.orig_p, 0);
    for (std::size_t g = 0; g < map.row_groups.size(); ++g) {
        for (std::int32_t i : map.row_groups[g]) {
            machines[i] = merged_solution.machine_cell[g];
        }
    }
    for (std::size_t g = 0; g < map.col_groups.size(); ++g) {
        for (std::int32_t j : map.col_groups[g]) {
            parts[j] = merged_solution.part_cell[g];
        }
    }
    return CfpSolution(std::move(machines), std::move(parts));
}

}  // namespace cfp::preprocess
