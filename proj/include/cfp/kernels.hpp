// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>

namespace cfp::kernels {

// Hot inner loops of objective evaluation and the solvers, over row-major
// 0/1 byte matrices. All kernels are pure integer code, so every backend
// produces bit-identical results; the AVX2 variants are selected at runtime
// when the CPU supports them. Callers guarantee the weighted totals fit
// int64 (enforced at CfpInstance construction).

struct EvSums {
    std::int64_t ones_outside;   // sum of col_weight[j]*bits[j]   where part_cell[j] != cell
    std::int64_t zeros_inside;   // sum of col_weight[j]*(1-bits[j]) where part_cell[j] == cell
};

// One machine row against a part assignment: weighted exception and void
// contributions of the row, given the row lives in `cell`.
using RowEvFn = EvSums (*)(const std::uint8_t* bits, const std::int32_t* part_cell,
                           const std::int32_t* col_weight, std::size_t p,
                           std::int32_t cell);

// acc[j] += weight * bits[j]; builds per-cell weighted column-one counts.
using AddWeightedRowFn = void (*)(const std::uint8_t* bits, std::int64_t* acc,
                                  std::int64_t weight, std::size_t p);

// sum of col_weight[j] * bits[j] over the row.
using WeightedOnesFn = std::int64_t (*)(const std::uint8_t* bits,
                                        const std::int32_t* col_weight, std::size_t p);

struct KernelTable {
    const char* name;
    RowEvFn row_ev;
    AddWeightedRowFn add_weighted_row;
    WeightedOnesFn weighted_ones;
};

const KernelTable& scalar_kernels();

#if defined(CFP_HAVE_AVX2)
const KernelTable& avx2_kernels();
#endif

// Backend picked once per process: AVX2 when compiled in and the CPU has it,
// scalar otherwise. force_kernels(&table) pins a specific backend (tests use
// it for scalar/AVX2 equivalence runs); force_kernels(nullptr) restores
// auto-detection.
const KernelTable& active_kernels();
void force_kernels(const KernelTable* table);

}  // namespace cfp::kernels
