// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#include "cfp/kernels.hpp"

#include <atomic>

namespace cfp::kernels {

namespace {

EvSums row_ev_scalar(const std::uint8_t* bits, const std::int32_t* part_cell,
                     const std::int32_t* col_weight, std::size_t p,
                     std::int32_t cell) {
    std::int64_t ones_outside = 0;
    std::int64_t zeros_inside = 0;
    for (std::size_t j = 0; j < p; ++j) {
        if (part_cell[j] == cell) {
            zeros_inside += static_cast<std::int64_t>(col_weight[j]) * (1 - bits[j]);
        } else {
            ones_outside += static_cast<std::int64_t>(col_weight[j]) * bits[j];
        }
    }
    return {ones_outside, zeros_inside};
}

void add_weighted_row_scalar(const std::uint8_t* bits, std::int64_t* acc,
                             std::int64_t weight, std::size_t p) {
    for (std::size_t j = 0; j < p; ++j) {
        if (bits[j]) acc[j] += weight;
    }
}

std::int64_t weighted_ones_scalar(const std::uint8_t* bits,
                                  const std::int32_t* col_weight, std::size_t p) {
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < p; ++j) {
        sum += static_cast<std::int64_t>(col_weight[j]) * bits[j];
    }
    return sum;
}

const KernelTable kScalar{"scalar", row_ev_scalar, add_weighted_row_scalar,
                          weighted_ones_scalar};

std::atomic<const KernelTable*> g_forced{nullptr};

#if defined(CFP_HAVE_AVX2)
bool cpu_has_avx2() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}
#endif

const KernelTable& detect() {
#if defined(CFP_HAVE_AVX2)
    static const KernelTable& picked = cpu_has_avx2() ? avx2_kernels() : kScalar;
    return picked;
#else
    return kScalar;
#endif
}

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

const KernelTable& active_kernels() {
    const KernelTable* forced = g_forced.load(std::memory_order_acquire);
    return forced ? *forced : detect();
}

void force_kernels(const KernelTable* table) {
    g_forced.store(table, std::memory_order_release);
}

}  // namespace cfp::kernels
