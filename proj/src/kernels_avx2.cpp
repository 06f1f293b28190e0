// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#include "cfp/kernels.hpp"

#if defined(CFP_HAVE_AVX2)

#include <immintrin.h>

#include <cstring>

namespace cfp::kernels {

namespace {

// Vector lanes hold 8 columns of 0/1 bytes widened to epi32, with results
// accumulated in epi64 so no intermediate can wrap for any instance that
// passed the construction-time weight guard.

std::int64_t hsum_epi64(__m256i v) {
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i s = _mm_add_epi64(lo, hi);
    return _mm_extract_epi64(s, 0) + _mm_extract_epi64(s, 1);
}

void accumulate_epi32_as_epi64(__m256i terms, __m256i* acc_lo, __m256i* acc_hi) {
    __m128i lo = _mm256_castsi256_si128(terms);
    __m128i hi = _mm256_extracti128_si256(terms, 1);
    *acc_lo = _mm256_add_epi64(*acc_lo, _mm256_cvtepi32_epi64(lo));
    *acc_hi = _mm256_add_epi64(*acc_hi, _mm256_cvtepi32_epi64(hi));
}

EvSums row_ev_avx2(const std::uint8_t* bits, const std::int32_t* part_cell,
                   const std::int32_t* col_weight, std::size_t p,
                   std::int32_t cell) {
    const __m256i cell_v = _mm256_set1_epi32(cell);
    __m256i e_lo = _mm256_setzero_si256();
    __m256i e_hi = _mm256_setzero_si256();
    __m256i v_lo = _mm256_setzero_si256();
    __m256i v_hi = _mm256_setzero_si256();
    std::size_t j = 0;
    for (; j + 8 <= p; j += 8) {
        __m256i b = _mm256_cvtepu8_epi32(
            _mm_loadl_epi64(reinterpret_cast<const __m128i*>(bits + j)));
        __m256i pc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(part_cell + j));
        __m256i w = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col_weight + j));
        __m256i inside = _mm256_cmpeq_epi32(pc, cell_v);
        __m256i w_ones = _mm256_mullo_epi32(w, b);               // weight where bit set
        __m256i w_zeros = _mm256_sub_epi32(w, w_ones);           // weight where bit clear
        accumulate_epi32_as_epi64(_mm256_andnot_si256(inside, w_ones), &e_lo, &e_hi);
        accumulate_epi32_as_epi64(_mm256_and_si256(inside, w_zeros), &v_lo, &v_hi);
    }
    EvSums out{hsum_epi64(_mm256_add_epi64(e_lo, e_hi)),
               hsum_epi64(_mm256_add_epi64(v_lo, v_hi))};
    for (; j < p; ++j) {
        if (part_cell[j] == cell) {
            out.zeros_inside += static_cast<std::int64_t>(col_weight[j]) * (1 - bits[j]);
        } else {
            out.ones_outside += static_cast<std::int64_t>(col_weight[j]) * bits[j];
        }
    }
    return out;
}

void add_weighted_row_avx2(const std::uint8_t* bits, std::int64_t* acc,
                           std::int64_t weight, std::size_t p) {
    const __m256i w_v = _mm256_set1_epi64x(weight);
    const __m256i zero = _mm256_setzero_si256();
    std::size_t j = 0;
    for (; j + 4 <= p; j += 4) {
        int packed;
        std::memcpy(&packed, bits + j, sizeof(packed));
        __m256i b = _mm256_cvtepu8_epi64(_mm_cvtsi32_si128(packed));
        __m256i mask = _mm256_sub_epi64(zero, b);                // 0/1 -> 0/all-ones
        __m256i a = _mm256_loadu_si256(reinterpret_cast<__m256i*>(acc + j));
        a = _mm256_add_epi64(a, _mm256_and_si256(w_v, mask));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + j), a);
    }
    for (; j < p; ++j) {
        if (bits[j]) acc[j] += weight;
    }
}

std::int64_t weighted_ones_avx2(const std::uint8_t* bits,
                                const std::int32_t* col_weight, std::size_t p) {
    __m256i lo = _mm256_setzero_si256();
    __m256i hi = _mm256_setzero_si256();
    std::size_t j = 0;
    for (; j + 8 <= p; j += 8) {
        __m256i b = _mm256_cvtepu8_epi32(
            _mm_loadl_epi64(reinterpret_cast<const __m128i*>(bits + j)));
        __m256i w = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col_weight + j));
        accumulate_epi32_as_epi64(_mm256_mullo_epi32(w, b), &lo, &hi);
    }
    std::int64_t sum = hsum_epi64(_mm256_add_epi64(lo, hi));
    for (; j < p; ++j) {
        sum += static_cast<std::int64_t>(col_weight[j]) * bits[j];
    }
    return sum;
}

const KernelTable kAvx2{"avx2", row_ev_avx2, add_weighted_row_avx2,
                        weighted_ones_avx2};

}  // namespace

const KernelTable& avx2_kernels() { return kAvx2; }

}  // namespace cfp::kernels

#endif  // CFP_HAVE_AVX2
