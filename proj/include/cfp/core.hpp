// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cfp/rational.hpp"

namespace cfp {

// Dense row-major 0/1 matrix. Dimensions are fixed at construction and
// must both be >= 1 everywhere an instance is formed.
class BoolMatrix {
public:
    BoolMatrix(int rows, int cols);  // zero-filled
    BoolMatrix(int rows, int cols, std::vector<std::uint8_t> data);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::uint8_t at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, std::uint8_t v) { data_[static_cast<std::size_t>(r) * cols_ + c] = v; }
    const std::uint8_t* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * cols_; }

    bool operator==(const BoolMatrix& o) const = default;

private:
    int rows_;
    int cols_;
    std::vector<std::uint8_t> data_;
};

// A machine-part incidence instance. Row/column weights default to 1 and
// become multiplicities when identical rows or columns are merged; the
// weighted objective of a merged instance equals the unweighted objective
// of the instance it came from.
//
// cell_bound: maximum number of cells a solution may use. Defaults to
// min(m, p); merge products and reduction extensions carry the bound of the
// instance they represent, which differs from min of their own dimensions.
//
// Construction validates: m, p >= 1, entries 0/1, weights >= 1, and
// (sum of row weights) * (sum of col weights) <= 10^9 so that every weighted
// count in evaluation and solving provably fits int64 (GuardError otherwise).
class CfpInstance {
public:
    explicit CfpInstance(BoolMatrix matrix);
    CfpInstance(BoolMatrix matrix, std::vector<std::int32_t> row_weights,
                std::vector<std::int32_t> col_weights);
    CfpInstance(BoolMatrix matrix, std::vector<std::int32_t> row_weights,
                std::vector<std::int32_t> col_weights, int cell_bound);

    int m() const { return matrix_.rows(); }
    int p() const { return matrix_.cols(); }
    const BoolMatrix& matrix() const { return matrix_; }
    const std::vector<std::int32_t>& row_weights() const { return row_weights_; }
    const std::vector<std::int32_t>& col_weights() const { return col_weights_; }
    int cell_bound() const { return cell_bound_; }
    bool unit_weights() const;

    // weighted count of ones, sum_ij w_i * u_j * a_ij
    std::int64_t n1() const { return n1_; }
    std::int64_t weight_area() const { return total_row_weight_ * total_col_weight_; }

    bool operator==(const CfpInstance& o) const;

private:
    void validate_and_finish();

    BoolMatrix matrix_;
    std::vector<std::int32_t> row_weights_;
    std::vector<std::int32_t> col_weights_;
    int cell_bound_;
    std::int64_t n1_ = 0;
    std::int64_t total_row_weight_ = 0;
    std::int64_t total_col_weight_ = 0;
};

// Assignment of every machine and part to a cell index. num_cells is
// derived: the number of distinct indices used across both vectors.
struct CfpSolution {
    std::vector<std::int32_t> machine_cell;
    std::vector<std::int32_t> part_cell;
    int num_cells = 0;

    CfpSolution() = default;
    CfpSolution(std::vector<std::int32_t> machines, std::vector<std::int32_t> parts);

    bool operator==(const CfpSolution& o) const {
        return machine_cell == o.machine_cell && part_cell == o.part_cell;
    }
};

// Objective values of one solution. f2 (grouping efficacy) is undefined
// when n1 + v == 0; efficacy() throws DomainError in that case.
struct ObjectiveReport {
    std::int64_t n1 = 0;
    std::int64_t e = 0;   // weighted ones outside cells (exceptions)
    std::int64_t v = 0;   // weighted zeros inside cells (voids)
    std::int64_t f1 = 0;  // e + v
    std::optional<Rational> f2;

    const Rational& efficacy() const;
};

// Weighted e, v, f1 = e + v and f2 = (n1 - e) / (n1 + v) for `solution` on
// `instance`. Dimension mismatches and out-of-range cell indices throw
// DomainError. Runs in O(m * p) through the active kernel backend.
ObjectiveReport evaluate(const CfpInstance& instance, const CfpSolution& solution);

// Structural check. Returns human-readable violation descriptions, empty
// when the solution is well-formed for the instance: vector lengths match
// m and p, and every index is in [0, cell_bound).
std::vector<std::string> validate(const CfpInstance& instance,
                                  const CfpSolution& solution);

// Canonical relabeling: cells renumbered by first occurrence scanning
// machine_cell then part_cell, so equivalent partitions compare equal.
// Negative indices throw DomainError.
CfpSolution canonicalize(const CfpSolution& solution);

// Lexicographic order on (machine_cell, part_cell); the deterministic
// tie-break used by every solver when objective values are equal.
bool solution_less(const CfpSolution& a, const CfpSolution& b);

}  // namespace cfp
