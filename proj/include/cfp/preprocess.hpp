// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "cfp/core.hpp"

namespace cfp::preprocess {

// Record of which original rows/columns each merged row/column stands for.
// Groups are ordered by first occurrence, so unmerging a canonical solution
// yields a canonical solution.
struct MergeMap {
    std::vector<std::vector<std::int32_t>> row_groups;
    std::vector<std::vector<std::int32_t>> col_groups;
    int orig_m = 0;
    int orig_p = 0;
};

// Identical rows and identical columns never gain from being split across
// cells, so collapsing each group to one representative whose weight is the
// group's total weight preserves both optimal objective values. Proven for
// grouping efficacy; the f1 analogue rests on the same exchange argument
// and is gated by this tested constant so a counterexample flips one line,
// not the build.
inline constexpr bool merge_preserves_f1 = true;

// Collapse duplicate rows/columns into weighted representatives. The result
// carries the input's cell bound (a merged instance represents the original
// solution space, whose bound is min of the ORIGINAL dimensions).
std::pair<CfpInstance, MergeMap> merge(const CfpInstance& instance);

// Expand a solution on the merged instance to the original dimensions:
// every member of a group receives its representative's cell.
CfpSolution unmerge_solution(const CfpSolution& merged_solution, const MergeMap& map);

}  // namespace cfp::preprocess
