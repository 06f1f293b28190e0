// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#include "cfp/core.hpp"

#include <algorithm>
#include <unordered_set>

#include "cfp/error.hpp"
#include "cfp/kernels.hpp"

namespace cfp {

namespace {

constexpr std::int64_t kMaxWeightArea = 1'000'000'000;

int count_distinct(const std::vector<std::int32_t>& a,
                   const std::vector<std::int32_t>& b) {
    std::unordered_set<std::int32_t> seen(a.begin(), a.end());
    seen.insert(b.begin(), b.end());
    return static_cast<int>(seen.size());
}

}  // namespace

BoolMatrix::BoolMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
    if (rows < 1 || cols < 1) throw DomainError("matrix dimensions must be positive");
}

BoolMatrix::BoolMatrix(int rows, int cols, std::vector<std::uint8_t> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows < 1 || cols < 1) throw DomainError("matrix dimensions must be positive");
    if (data_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        throw DomainError("matrix data size does not match dimensions");
    }
    for (std::uint8_t v : data_) {
        if (v > 1) throw DomainError("matrix entries must be 0 or 1");
    }
}

CfpInstance::CfpInstance(BoolMatrix matrix)
    : matrix_(std::move(matrix)),
      row_weights_(matrix_.rows(), 1),
      col_weights_(matrix_.cols(), 1),
      cell_bound_(std::min(matrix_.rows(), matrix_.cols())) {
    validate_and_finish();
}

CfpInstance::CfpInstance(BoolMatrix matrix, std::vector<std::int32_t> row_weights,
                         std::vector<std::int32_t> col_weights)
    : matrix_(std::move(matrix)),
      row_weights_(std::move(row_weights)),
      col_weights_(std::move(col_weights)),
      cell_bound_(std::min(matrix_.rows(), matrix_.cols())) {
    validate_and_finish();
}

CfpInstance::CfpInstance(BoolMatrix matrix, std::vector<std::int32_t> row_weights,
                         std::vector<std::int32_t> col_weights, int cell_bound)
    : matrix_(std::move(matrix)),
      row_weights_(std::move(row_weights)),
      col_weights_(std::move(col_weights)),
      cell_bound_(cell_bound) {
    validate_and_finish();
}

void CfpInstance::validate_and_finish() {
    if (row_weights_.size() != static_cast<std::size_t>(matrix_.rows()) ||
        col_weights_.size() != static_cast<std::size_t>(matrix_.cols())) {
        throw DomainError("weight vector length does not match matrix dimensions");
    }
    if (cell_bound_ < 1) throw DomainError("cell bound must be positive");
    for (std::int32_t w : row_weights_) {
        if (w < 1) throw DomainError("row weights must be positive");
        total_row_weight_ += w;
    }
    for (std::int32_t u : col_weights_) {
        if (u < 1) throw DomainError("column weights must be positive");
        total_col_weight_ += u;
    }
    if (total_row_weight_ * total_col_weight_ > kMaxWeightArea) {
        throw GuardError("total weighted area exceeds 10^9; exact 64-bit "
                         "arithmetic is no longer guaranteed");
    }
    const auto& k = kernels::active_kernels();
    for (int i = 0; i < matrix_.rows(); ++i) {
        n1_ += row_weights_[i] *
               k.weighted_ones(matrix_.row(i), col_weights_.data(),
                               static_cast<std::size_t>(matrix_.cols()));
    }
}

bool CfpInstance::unit_weights() const {
    return total_row_weight_ == matrix_.rows() && total_col_weight_ == matrix_.cols();
}

bool CfpInstance::operator==(const CfpInstance& o) const {
    return matrix_ == o.matrix_ && row_weights_ == o.row_weights_ &&
           col_weights_ == o.col_weights_ && cell_bound_ == o.cell_bound_;
}

CfpSolution::CfpSolution(std::vector<std::int32_t> machines,
                         std::vector<std::int32_t> parts)
    : machine_cell(std::move(machines)), part_cell(std::move(parts)) {
    num_cells = count_distinct(machine_cell, part_cell);
}

const Rational& ObjectiveReport::efficacy() const {
    if (!f2) throw DomainError("grouping efficacy undefined: n1 + v == 0");
    return *f2;
}

ObjectiveReport evaluate(const CfpInstance& instance, const CfpSolution& solution) {
    if (solution.machine_cell.size() != static_cast<std::size_t>(instance.m()) ||
        solution.part_cell.size() != static_cast<std::size_t>(instance.p())) {
        throw DomainError("solution dimensions do not match instance");
    }
    for (std::int32_t c : solution.machine_cell) {
        if (c < 0 || c >= instance.cell_bound()) {
            throw DomainError("machine cell index out of range");
        }
    }
    for (std::int32_t c : solution.part_cell) {
        if (c < 0 || c >= instance.cell_bound()) {
            throw DomainError("part cell index out of range");
        }
    }
    const auto& k = kernels::active_kernels();
    ObjectiveReport r;
    r.n1 = instance.n1();
    for (int i = 0; i < instance.m(); ++i) {
        kernels::EvSums s = k.row_ev(instance.matrix().row(i),
                                     solution.part_cell.data(),
                                     instance.col_weights().data(),
                                     static_cast<std::size_t>(instance.p()),
                                     solution.machine_cell[i]);
        r.e += instance.row_weights()[i] * s.ones_outside;
        r.v += instance.row_weights()[i] * s.zeros_inside;
    }
    r.f1 = r.e + r.v;
    if (r.n1 + r.v > 0) r.f2 = Rational(r.n1 - r.e, r.n1 + r.v);
    return r;
}

std::vector<std::string> validate(const CfpInstance& instance,
                                  const CfpSolution& solution) {
    std::vector<std::string> violations;
    if (solution.machine_cell.size() != static_cast<std::size_t>(instance.m())) {
        violations.push_back("machine assignment has " +
                             std::to_string(solution.machine_cell.size()) +
                             " entries, instance has " + std::to_string(instance.m()) +
                             " machines");
    }
    if (solution.part_cell.size() != static_cast<std::size_t>(instance.p())) {
        violations.push_back("part assignment has " +
                             std::to_string(solution.part_cell.size()) +
                             " entries, instance has " + std::to_string(instance.p()) +
                             " parts");
    }
    auto check_range = [&](const std::vector<std::int32_t>& cells, const char* kind) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (cells[i] < 0 || cells[i] >= instance.cell_bound()) {
                violations.push_back(std::string(kind) + " " + std::to_string(i) +
                                     " assigned to cell " + std::to_string(cells[i]) +
                                     ", valid range is 0.." +
                                     std::to_string(instance.cell_bound() - 1));
            }
        }
    };
    check_range(solution.machine_cell, "machine");
    check_range(solution.part_cell, "part");
    return violations;
}

CfpSolution canonicalize(const CfpSolution& solution) {
    std::int32_t max_label = -1;
    for (std::int32_t c : solution.machine_cell) {
        if (c < 0) throw DomainError("cell index out of range");
        max_label = std::max(max_label, c);
    }
    for (std::int32_t c : solution.part_cell) {
        if (c < 0) throw DomainError("cell index out of range");
        max_label = std::max(max_label, c);
    }
    std::vector<std::int32_t> relabel(static_cast<std::size_t>(max_label) + 1, -1);
    std::int32_t next = 0;
    CfpSolution out = solution;
    auto map = [&](std::vector<std::int32_t>& cells) {
        for (std::int32_t& c : cells) {
            if (relabel[c] < 0) relabel[c] = next++;
            c = relabel[c];
        }
    };
    map(out.machine_cell);
    map(out.part_cell);
    out.num_cells = next;
    return out;
}

bool solution_less(const CfpSolution& a, const CfpSolution& b) {
    if (a.machine_cell != b.machine_cell) {
        return std::lexicographical_compare(a.machine_cell.begin(), a.machine_cell.end(),
                                            b.machine_cell.begin(), b.machine_cell.end());
    }
    return std::lexicographical_compare(a.part_cell.begin(), a.part_cell.end(),
                                        b.part_cell.begin(), b.part_cell.end());
}

}  // namespace cfp
