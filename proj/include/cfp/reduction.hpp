// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "cfp/core.hpp"
#include "cfp/preprocess.hpp"
#include "cfp/rational.hpp"

namespace cfp::reduction {

// The extension that ties the linear objective to grouping efficacy: the
// base m x p matrix gains an all-ones block of side m*p on fresh machines
// and parts, placed diagonally (zeros elsewhere). The block multiplies the
// one-count by a factor large enough that, on the extended instance,
// efficacy ranks solutions exactly as f1 = e + v ranks their restrictions.
//
// cell_bound is min(m, p) + 1: a base solution plus one cell for the block.
// This is the solution space the correspondence is about; under the looser
// min(m+mp, p+mp) bound the extended instance can cheat by parking
// zero-rows/columns of the base in one-sided cells no base solution may
// use, and the threshold equivalence below breaks.
class ExtendedInstance {
public:
    explicit ExtendedInstance(CfpInstance base);

    const CfpInstance& base() const { return base_; }
    int block() const { return block_; }                  // m * p
    std::int64_t delta_n1() const;                        // block^2
    std::int64_t extended_n1() const;                     // base n1 + block^2
    int cell_bound() const { return cell_bound_; }

    // Materialized (m + mp) x (p + mp) instance; memory grows with the
    // square of m*p, intended for inspection and small inputs.
    CfpInstance full() const;

    // Duplicate-collapsed form and its map onto full(). The mp block rows
    // are identical (likewise columns), so the merged instance has at most
    // (m + 1) x (p + 1) shape regardless of block size; solvers run here.
    std::pair<CfpInstance, preprocess::MergeMap> merged() const;

private:
    CfpInstance base_;
    int block_;
    int cell_bound_;
};

// pre: unit weights (the construction is matrix-wise) and n1 >= 1 (zero
// matrices are answered directly, never through the reduction).
ExtendedInstance extend_instance(const CfpInstance& instance);

// Threshold carrying "f1 <= c on the base" to "efficacy >= 1 - c/n1~ on the
// extension", n1~ = extended_n1(). pre: 0 <= c < m*p.
Rational threshold_transform(const ExtendedInstance& ext, std::int64_t c);

// Base solution extended with all block machines/parts in one fresh cell.
// Then e~ = e, v~ = v, so efficacy of the lift is (n1~ - e) / (n1~ + v).
CfpSolution lift_solution(const ExtendedInstance& ext, const CfpSolution& base_solution);

// Restriction of a full-dimension solution to the base machines/parts,
// canonicalized. Solutions of interest (efficacy-optimal ones) never spread
// base elements over more than min(m, p) cells, which keeps the restriction
// within the base bound; the caller sees DomainError otherwise.
CfpSolution project_solution(const ExtendedInstance& ext, const CfpSolution& full_solution);

struct Decision {
    bool yes = false;
    // a base solution with f1 <= c, present iff yes
    std::optional<CfpSolution> witness;
};

// Exact efficacy solver on a (merged, weighted, bound-carrying) instance.
using EfficacySolver = std::function<Rational(const CfpInstance&, CfpSolution* witness)>;

// Decides "min f1 <= c" using only the efficacy machinery: trivial cases
// answered directly (c >= m*p always yes; n1 == 0 is yes iff c >= 0 when
// min(m,p) >= 2, else iff c >= m*p since one cell must swallow the zero
// matrix), otherwise solve efficacy on the merged extension and compare
// with the transformed threshold. The witness is the solver's optimum,
// unmerged and projected.
Decision decide_cfp1_via_cfp2(const CfpInstance& instance, std::int64_t c,
                              const EfficacySolver& solver);

}  // namespace cfp::reduction
