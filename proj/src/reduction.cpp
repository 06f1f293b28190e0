// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#include "cfp/reduction.hpp"

#include <algorithm>
#include <string>

#include "cfp/error.hpp"

namespace cfp::reduction {

ExtendedInstance::ExtendedInstance(CfpInstance base) : base_(std::move(base)) {
    if (!base_.unit_weights()) {
        throw DomainError("extension is defined for unit-weight instances");
    }
    if (base_.n1() < 1) {
        throw DomainError("extension of a zero matrix is trivial; answer directly");
    }
    block_ = base_.m() * base_.p();
    cell_bound_ = std::min(base_.m(), base_.p()) + 1;
}

std::int64_t ExtendedInstance::delta_n1() const {
    return static_cast<std::int64_t>(block_) * block_;
}

std::int64_t ExtendedInstance::extended_n1() const {
    return base_.n1() + delta_n1();
}

CfpInstance ExtendedInstance::full() const {
    int m = base_.m();
    int p = base_.p();
    BoolMatrix a(m + block_, p + block_);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < p; ++j) a.set(i, j, base_.matrix().at(i, j));
    }
    for (int i = 0; i < block_; ++i) {
        for (int j = 0; j < block_; ++j) a.set(m + i, p + j, 1);
    }
    return CfpInstance(std::move(a),
                       std::vector<std::int32_t>(m + block_, 1),
                       std::vector<std::int32_t>(p + block_, 1), cell_bound_);
}

std::pair<CfpInstance, preprocess::MergeMap> ExtendedInstance::merged() const {
    // Identical rows of the extension are exactly identical rows of the
    // base (the zero padding preserves equality) plus the block rows as one
    // group; a block row can never equal a padded base row since they
    // differ on the block columns. Build the merged form directly instead
    // of materializing full().
    auto [mb, map] = preprocess::merge(base_);
    int mm = mb.m();
    int mp = mb.p();
    BoolMatrix a(mm + 1, mp + 1);
    for (int i = 0; i < mm; ++i) {
        for (int j = 0; j < mp; ++j) a.set(i, j, mb.matrix().at(i, j));
    }
    a.set(mm, mp, 1);
    std::vector<std::int32_t> rw = mb.row_weights();
    std::vector<std::int32_t> cw = mb.col_weights();
    rw.push_back(block_);
    cw.push_back(block_);

    preprocess::MergeMap full_map = map;
    full_map.orig_m = base_.m() + block_;
    full_map.orig_p = base_.p() + block_;
    full_map.row_groups.emplace_back();
    for (int i = 0; i < block_; ++i) {
        full_map.row_groups.back().push_back(base_.m() + i);
    }
    full_map.col_groups.emplace_back();
    for (int j = 0; j < block_; ++j) {
        full_map.col_groups.back().push_back(base_.p() + j);
    }
    return {CfpInstance(std::move(a), std::move(rw), std::move(cw), cell_bound_),
            std::move(full_map)};
}

ExtendedInstance extend_instance(const CfpInstance& instance) {
    return ExtendedInstance(instance);
}

Rational threshold_transform(const ExtendedInstance& ext, std::int64_t c) {
    if (c < 0 || c >= ext.block()) {
        throw DomainError("threshold must be in [0, m*p); outside that range "
                          "the decision is trivial");
    }
    return Rational(ext.extended_n1() - c, ext.extended_n1());
}

CfpSolution lift_solution(const ExtendedInstance& ext, const CfpSolution& base_solution) {
    if (!validate(ext.base(), base_solution).empty()) {
        throw DomainError("solution is not valid for the base instance");
    }
    std::int32_t fresh = 0;
    for (std::int32_t c : base_solution.machine_cell) fresh = std::max(fresh, c + 1);
    for (std::int32_t c : base_solution.part_cell) fresh = std::max(fresh, c + 1);
    CfpSolution out = base_solution;
    out.machine_cell.insert(out.machine_cell.end(), ext.block(), fresh);
    out.part_cell.insert(out.part_cell.end(), ext.block(), fresh);
    return CfpSolution(std::move(out.machine_cell), std::move(out.part_cell));
}

CfpSolution project_solution(const ExtendedInstance& ext, const CfpSolution& full_solution) {
    int fm = ext.base().m() + ext.block();
    int fp = ext.base().p() + ext.block();
    if (full_solution.machine_cell.size() != static_cast<std::size_t>(fm) ||
        full_solution.part_cell.size() != static_cast<std::size_t>(fp)) {
        throw DomainError("solution dimensions do not match the extension");
    }
    std::vector<std::int32_t> machines(full_solution.machine_cell.begin(),
                                       full_solution.machine_cell.begin() + ext.base().m());
    std::vector<std::int32_t> parts(full_solution.part_cell.begin(),
                                    full_solution.part_cell.begin() + ext.base().p());
    CfpSolution out = canonicalize(CfpSolution(std::move(machines), std::move(parts)));
    if (out.num_cells > ext.base().cell_bound()) {
        throw DomainError("projection uses " + std::to_string(out.num_cells) +
                          " cells, base instance allows " +
                          std::to_string(ext.base().cell_bound()));
    }
    return out;
}

Decision decide_cfp1_via_cfp2(const CfpInstance& instance, std::int64_t c,
                              const EfficacySolver& solver) {
    if (!instance.unit_weights()) {
        throw DomainError("reduction is defined for unit-weight instances");
    }
    if (c < 0) return {false, std::nullopt};
    int m = instance.m();
    int p = instance.p();
    std::int64_t area = static_cast<std::int64_t>(m) * p;
    if (instance.n1() == 0) {
        // One cell forced when min(m, p) == 1: every zero becomes a void.
        // Otherwise machines and parts take two disjoint cells, f1 = 0.
        if (std::min(m, p) >= 2) {
            CfpSolution w(std::vector<std::int32_t>(m, 0),
                          std::vector<std::int32_t>(p, 1));
            return {true, w};
        }
        if (c >= area) {
            CfpSolution w(std::vector<std::int32_t>(m, 0),
                          std::vector<std::int32_t>(p, 0));
            return {true, w};
        }
        return {false, std::nullopt};
    }
    if (c >= area) {
        // Single cell: f1 = number of zeros < m*p <= c.
        CfpSolution w(std::vector<std::int32_t>(m, 0),
                      std::vector<std::int32_t>(p, 0));
        return {true, w};
    }
    ExtendedInstance ext = extend_instance(instance);
    auto [merged, map] = ext.merged();
    CfpSolution merged_witness;
    Rational best = solver(merged, &merged_witness);
    Rational bar = threshold_transform(ext, c);
    if (best < bar) return {false, std::nullopt};
    CfpSolution projected =
        project_solution(ext, preprocess::unmerge_solution(merged_witness, map));
    return {true, projected};
}

}  // namespace cfp::reduction
