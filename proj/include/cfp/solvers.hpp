// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cfp/core.hpp"
#include "cfp/rational.hpp"

namespace cfp::solvers {

enum class Objective { f1, efficacy };
enum class Method { oracle, exact, heuristic };

struct SolveOptions {
    // Worker threads for the enumeration solvers; 0 uses the hardware
    // count. Results are bit-identical for every thread count.
    int threads = 1;
    // Collapse duplicate rows/columns before exact search (value-preserving;
    // the witness is expanded back). The guard below applies after merging.
    bool premerge = true;
    // oracle_solve enumerates joint partitions of m + p elements; refuse
    // beyond this per-side size.
    int oracle_max_dim = 6;
    // exact solvers enumerate machine partitions; refuse beyond this row
    // count (Bell(12) is ~4.2e6).
    int exact_max_machines = 12;
    // heuristic start and sweep cap
    std::uint64_t seed = 1;
    int max_iters = 1000;
};

struct SolveResult {
    CfpSolution solution;     // canonical witness
    ObjectiveReport report;   // evaluated on the instance as given
    Method method = Method::oracle;
    // enumeration effort: oracle counts joint partitions, exact counts
    // machine partitions (summed over outer iterations for efficacy),
    // heuristic counts improvement sweeps; identical across thread counts
    std::uint64_t nodes = 0;
};

// Set partitions of {0..n-1} into at most max_blocks nonempty blocks, coded
// as restricted growth strings (a[0] = 0, a[i] <= max(a[0..i-1]) + 1) and
// visited in lexicographic order.
class PartitionIterator {
public:
    PartitionIterator(int n, int max_blocks);

    const std::vector<std::int32_t>& current() const { return a_; }
    int num_blocks() const { return prefix_max_.back() + 1; }
    bool advance();  // false once exhausted; current() then stays on the last string

private:
    std::vector<std::int32_t> a_;
    std::vector<std::int32_t> prefix_max_;
    int cap_;
};

// Ground-truth solver: evaluates every joint (machine, part) partition with
// at most cell_bound cells and keeps the optimum, breaking value ties
// toward the lexicographically smallest canonical solution. Exponential;
// guarded by oracle_max_dim. For the efficacy objective n1 >= 1 is
// required (DomainError).
SolveResult oracle_solve(const CfpInstance& instance, Objective objective,
                         const SolveOptions& opts = {});

// Exact f1: enumerate machine partitions only; for a fixed machine
// partition each part independently takes the cell minimizing its exception
// plus void contribution, with one shared machine-free cell available while
// the bound permits. Ties toward the smallest cell index reproduce the
// oracle's canonical witness.
SolveResult exact_solve_f1(const CfpInstance& instance, const SolveOptions& opts = {});

// Exact efficacy via iterated linearization: for a trial value t = a/b,
// maximize b*(n1 - e) - a*(n1 + v) by the same machine-partition
// decomposition; the optimum is zero exactly when t is the maximum
// efficacy, and otherwise yields a solution with strictly better efficacy
// to restart from. Terminates in finitely many strictly increasing trials.
// pre: n1 >= 1.
SolveResult exact_solve_f2(const CfpInstance& instance, const SolveOptions& opts = {});

// Alternating local search: from a seeded random assignment, sweep parts
// then machines, moving each to its best cell while improvement lasts (for
// efficacy, "best" under the exact linearization at the current value, so
// accepted sweeps strictly improve). Valid deterministic output for any
// instance size; no optimality claim.
SolveResult heuristic_solve(const CfpInstance& instance, Objective objective,
                            const SolveOptions& opts = {});

struct Decision {
    bool yes = false;
    std::optional<CfpSolution> witness;  // present iff yes
};

// Exact threshold decision: f1 answers "min f1 <= threshold", efficacy
// answers "max efficacy >= threshold". method must be oracle or exact
// (heuristics cannot certify a "no").
Decision decide(const CfpInstance& instance, Objective objective,
                const Rational& threshold, Method method,
                const SolveOptions& opts = {});

}  // namespace cfp::solvers
