// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#include "cfp/solvers.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <thread>

#include "cfp/error.hpp"
#include "cfp/kernels.hpp"
#include "cfp/preprocess.hpp"

namespace cfp::solvers {

namespace {

using std::int32_t;
using std::int64_t;

int resolve_threads(const SolveOptions& opts) {
    if (opts.threads < 0) throw DomainError("thread count must be >= 0");
    int t = opts.threads;
    if (t == 0) t = static_cast<int>(std::thread::hardware_concurrency());
    return std::clamp(t, 1, 64);
}

// Weighted count of ones per column, sum_i w_i * a_ij.
std::vector<int64_t> column_ones(const CfpInstance& inst) {
    const auto& k = kernels::active_kernels();
    std::vector<int64_t> col(inst.p(), 0);
    for (int i = 0; i < inst.m(); ++i) {
        k.add_weighted_row(inst.matrix().row(i), col.data(),
                           inst.row_weights()[i], static_cast<std::size_t>(inst.p()));
    }
    return col;
}

// Scratch for one machine partition: per-cell weighted column-one counts
// and per-cell machine weight.
struct CellCounts {
    std::vector<int64_t> ones_in;  // cap rows of length p, row-major
    std::vector<int64_t> wsum;
    int p = 0;

    CellCounts(int cap, int p_) : ones_in(static_cast<std::size_t>(cap) * p_, 0),
                                  wsum(cap, 0), p(p_) {}

    int64_t* row(int k) { return ones_in.data() + static_cast<std::size_t>(k) * p; }

    void rebuild(const CfpInstance& inst, const std::vector<int32_t>& machine_cell,
                 int blocks) {
        const auto& k = kernels::active_kernels();
        std::fill(ones_in.begin(), ones_in.begin() + static_cast<std::size_t>(blocks) * p, 0);
        std::fill(wsum.begin(), wsum.begin() + blocks, 0);
        for (int i = 0; i < inst.m(); ++i) {
            int cell = machine_cell[i];
            k.add_weighted_row(inst.matrix().row(i), row(cell),
                               inst.row_weights()[i], static_cast<std::size_t>(p));
            wsum[cell] += inst.row_weights()[i];
        }
    }
};

// Best part assignment for a fixed machine partition under f1. Each part
// independently joins the cell minimizing u_j * (exceptions + voids) in its
// column; one shared machine-free cell (label `blocks`) is available while
// the bound permits. Ties take the smallest label, so together with the
// lexicographic scan over machine partitions the first optimum found is the
// canonical one.
int64_t assign_parts_f1(const CfpInstance& inst, const std::vector<int64_t>& col_ones,
                        CellCounts& counts, int blocks, int cap,
                        std::vector<int32_t>& labels) {
    int64_t total = 0;
    for (int j = 0; j < inst.p(); ++j) {
        int64_t u = inst.col_weights()[j];
        int64_t best = std::numeric_limits<int64_t>::max();
        int32_t best_k = -1;
        for (int k = 0; k < blocks; ++k) {
            int64_t cost = u * ((col_ones[j] - counts.row(k)[j]) +
                                (counts.wsum[k] - counts.row(k)[j]));
            if (cost < best) {
                best = cost;
                best_k = static_cast<int32_t>(k);
            }
        }
        if (blocks < cap) {
            int64_t fresh = u * col_ones[j];
            if (fresh < best) {
                best = fresh;
                best_k = static_cast<int32_t>(blocks);
            }
        }
        labels[j] = best_k;
        total += best;
    }
    return total;
}

// Best part assignment maximizing the linearized efficacy
// sum_j u_j * (beta * ones_in - alpha * (wsum - ones_in)); the machine-free
// cell contributes zero. Same tie rules as assign_parts_f1.
int64_t assign_parts_linearized(const CfpInstance& inst, CellCounts& counts,
                                int blocks, int cap, int64_t alpha, int64_t beta,
                                std::vector<int32_t>& labels) {
    int64_t total = 0;
    for (int j = 0; j < inst.p(); ++j) {
        int64_t u = inst.col_weights()[j];
        int64_t best = std::numeric_limits<int64_t>::min();
        int32_t best_k = -1;
        for (int k = 0; k < blocks; ++k) {
            int64_t gain = u * (beta * counts.row(k)[j] -
                                alpha * (counts.wsum[k] - counts.row(k)[j]));
            if (gain > best) {
                best = gain;
                best_k = static_cast<int32_t>(k);
            }
        }
        if (blocks < cap && 0 > best) {
            best = 0;
            best_k = static_cast<int32_t>(blocks);
        }
        labels[j] = best_k;
        total += best;
    }
    return total;
}

struct Candidate {
    bool valid = false;
    int64_t value = 0;          // minimized for f1, maximized for linearized
    std::vector<int32_t> machine_cell;
    std::vector<int32_t> part_cell;
};

bool candidate_better(const Candidate& cand, const Candidate& incumbent, bool minimize) {
    if (!incumbent.valid) return true;
    if (cand.value != incumbent.value) {
        return minimize ? cand.value < incumbent.value : cand.value > incumbent.value;
    }
    if (cand.machine_cell != incumbent.machine_cell) {
        return std::lexicographical_compare(cand.machine_cell.begin(), cand.machine_cell.end(),
                                            incumbent.machine_cell.begin(),
                                            incumbent.machine_cell.end());
    }
    return std::lexicographical_compare(cand.part_cell.begin(), cand.part_cell.end(),
                                        incumbent.part_cell.begin(),
                                        incumbent.part_cell.end());
}

// Machine-partition enumeration shared by the exact solvers. Worker r
// evaluates partitions with index congruent to r mod T; the merge of worker
// optima uses a total order, so the result is identical for every T.
template <typename PerPartition>
std::pair<Candidate, std::uint64_t> scan_machine_partitions(
    const CfpInstance& inst, int threads, bool minimize, PerPartition per_partition) {
    auto worker = [&](int rank, int stride, Candidate& out, std::uint64_t& count) {
        PartitionIterator it(inst.m(), inst.cell_bound());
        CellCounts counts(inst.cell_bound(), inst.p());
        std::vector<int32_t> labels(inst.p());
        Candidate local;
        std::uint64_t idx = 0;
        bool more = true;
        while (more) {
            if (idx % stride == static_cast<std::uint64_t>(rank)) {
                int blocks = it.num_blocks();
                counts.rebuild(inst, it.current(), blocks);
                int64_t value = per_partition(counts, blocks, labels);
                Candidate cand;
                cand.valid = true;
                cand.value = value;
                cand.machine_cell = it.current();
                cand.part_cell = labels;
                if (candidate_better(cand, local, minimize)) local = std::move(cand);
            }
            ++idx;
            more = it.advance();
        }
        out = std::move(local);
        count = idx;
    };

    if (threads == 1) {
        Candidate best;
        std::uint64_t count = 0;
        worker(0, 1, best, count);
        return {std::move(best), count};
    }
    std::vector<Candidate> bests(threads);
    std::vector<std::uint64_t> counts(threads, 0);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int r = 0; r < threads; ++r) {
        pool.emplace_back(worker, r, threads, std::ref(bests[r]), std::ref(counts[r]));
    }
    for (auto& t : pool) t.join();
    Candidate best;
    for (Candidate& c : bests) {
        if (c.valid && candidate_better(c, best, minimize)) best = std::move(c);
    }
    return {std::move(best), counts[0]};
}

void check_exact_guard(const CfpInstance& inst, const SolveOptions& opts) {
    if (inst.m() > opts.exact_max_machines) {
        throw GuardError("exact search over " + std::to_string(inst.m()) +
                         " machine rows exceeds the guard of " +
                         std::to_string(opts.exact_max_machines) +
                         " (merge duplicates or raise exact_max_machines)");
    }
}

SolveResult finish(const CfpInstance& original, CfpSolution solution, Method method,
                   std::uint64_t nodes) {
    SolveResult res;
    res.solution = canonicalize(solution);
    res.report = evaluate(original, res.solution);
    res.method = method;
    res.nodes = nodes;
    return res;
}

}  // namespace

PartitionIterator::PartitionIterator(int n, int max_blocks)
    : a_(n, 0), prefix_max_(n, 0), cap_(max_blocks) {
    if (n < 1) throw DomainError("partition iterator needs at least one element");
    if (max_blocks < 1) throw DomainError("partition iterator needs at least one block");
}

bool PartitionIterator::advance() {
    int n = static_cast<int>(a_.size());
    for (int i = n - 1; i >= 1; --i) {
        int32_t limit = std::min(prefix_max_[i - 1] + 1, cap_ - 1);
        if (a_[i] < limit) {
            ++a_[i];
            prefix_max_[i] = std::max(prefix_max_[i - 1], a_[i]);
            for (int k = i + 1; k < n; ++k) {
                a_[k] = 0;
                prefix_max_[k] = prefix_max_[i];
            }
            return true;
        }
    }
    return false;
}

SolveResult oracle_solve(const CfpInstance& instance, Objective objective,
                         const SolveOptions& opts) {
    if (instance.m() > opts.oracle_max_dim || instance.p() > opts.oracle_max_dim) {
        throw GuardError("oracle enumeration beyond " +
                         std::to_string(opts.oracle_max_dim) +
                         " machines or parts is refused; use the exact solver");
    }
    if (objective == Objective::efficacy && instance.n1() == 0) {
        throw DomainError("grouping efficacy undefined: instance has no ones");
    }
    int threads = resolve_threads(opts);
    int m = instance.m();
    int p = instance.p();
    int cap = instance.cell_bound();

    struct JointCandidate {
        bool valid = false;
        int64_t f1 = 0;
        Rational f2;
        CfpSolution sol;
    };
    bool want_f1 = objective == Objective::f1;
    auto better = [&](const JointCandidate& c, const JointCandidate& inc) {
        if (!inc.valid) return true;
        if (want_f1) {
            if (c.f1 != inc.f1) return c.f1 < inc.f1;
        } else {
            if (c.f2 != inc.f2) return inc.f2 < c.f2;
        }
        return solution_less(c.sol, inc.sol);
    };

    auto worker = [&](int rank, int stride, JointCandidate& out, std::uint64_t& count) {
        PartitionIterator it(m + p, cap);
        JointCandidate local;
        std::uint64_t idx = 0;
        bool more = true;
        while (more) {
            if (idx % stride == static_cast<std::uint64_t>(rank)) {
                const auto& a = it.current();
                CfpSolution sol(std::vector<int32_t>(a.begin(), a.begin() + m),
                                std::vector<int32_t>(a.begin() + m, a.end()));
                ObjectiveReport r = evaluate(instance, sol);
                JointCandidate cand;
                cand.valid = true;
                cand.f1 = r.f1;
                if (!want_f1) cand.f2 = r.efficacy();
                cand.sol = std::move(sol);
                if (better(cand, local)) local = std::move(cand);
            }
            ++idx;
            more = it.advance();
        }
        out = std::move(local);
        count = idx;
    };

    JointCandidate best;
    std::uint64_t nodes = 0;
    if (threads == 1) {
        worker(0, 1, best, nodes);
    } else {
        std::vector<JointCandidate> bests(threads);
        std::vector<std::uint64_t> counts(threads, 0);
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int r = 0; r < threads; ++r) {
            pool.emplace_back(worker, r, threads, std::ref(bests[r]), std::ref(counts[r]));
        }
        for (auto& t : pool) t.join();
        for (JointCandidate& c : bests) {
            if (c.valid && better(c, best)) best = std::move(c);
        }
        nodes = counts[0];
    }
    return finish(instance, std::move(best.sol), Method::oracle, nodes);
}

SolveResult exact_solve_f1(const CfpInstance& instance, const SolveOptions& opts) {
    const CfpInstance* work = &instance;
    std::optional<std::pair<CfpInstance, preprocess::MergeMap>> merged;
    if (opts.premerge && preprocess::merge_preserves_f1) {
        merged = preprocess::merge(instance);
        work = &merged->first;
    }
    check_exact_guard(*work, opts);
    int threads = resolve_threads(opts);
    std::vector<int64_t> col_ones = column_ones(*work);
    int cap = work->cell_bound();

    auto [best, nodes] = scan_machine_partitions(
        *work, threads, /*minimize=*/true,
        [&](CellCounts& counts, int blocks, std::vector<int32_t>& labels) {
            return assign_parts_f1(*work, col_ones, counts, blocks, cap, labels);
        });

    CfpSolution sol(std::move(best.machine_cell), std::move(best.part_cell));
    if (merged) sol = preprocess::unmerge_solution(sol, merged->second);
    SolveResult res = finish(instance, std::move(sol), Method::exact, nodes);
    if (res.report.f1 != best.value) {
        throw DomainError("internal: merged-search value does not match the witness");
    }
    return res;
}

SolveResult exact_solve_f2(const CfpInstance& instance, const SolveOptions& opts) {
    if (instance.n1() == 0) {
        throw DomainError("grouping efficacy undefined: instance has no ones");
    }
    const CfpInstance* work = &instance;
    std::optional<std::pair<CfpInstance, preprocess::MergeMap>> merged;
    if (opts.premerge) {
        merged = preprocess::merge(instance);
        work = &merged->first;
    }
    check_exact_guard(*work, opts);
    int threads = resolve_threads(opts);
    int cap = work->cell_bound();
    int64_t n1 = work->n1();

    // Start from the single-cell solution, always feasible.
    CfpSolution current(std::vector<int32_t>(work->m(), 0),
                        std::vector<int32_t>(work->p(), 0));
    Rational lambda = evaluate(*work, current).efficacy();
    std::uint64_t nodes = 0;
    // Each trial value is the efficacy of an actual solution and strictly
    // increases, so this terminates well before any bound; the cap is a
    // tripwire, not a tolerance.
    for (int iter = 0; iter < 1000; ++iter) {
        int64_t alpha = lambda.num();
        int64_t beta = lambda.den();
        auto [best, count] = scan_machine_partitions(
            *work, threads, /*minimize=*/false,
            [&](CellCounts& counts, int blocks, std::vector<int32_t>& labels) {
                return assign_parts_linearized(*work, counts, blocks, cap, alpha,
                                               beta, labels);
            });
        nodes += count;
        CfpSolution sol(std::move(best.machine_cell), std::move(best.part_cell));
        if (best.value == alpha * n1) {
            // Linearized optimum zero: lambda is the maximum efficacy and
            // this witness attains it (lexicographically least among the
            // optima, since the scan ranks equal-value solutions that way).
            if (merged) sol = preprocess::unmerge_solution(sol, merged->second);
            SolveResult res = finish(instance, std::move(sol), Method::exact, nodes);
            if (res.report.efficacy() != lambda) {
                throw DomainError("internal: linearized fixpoint does not match the witness");
            }
            return res;
        }
        lambda = evaluate(*work, sol).efficacy();
    }
    throw GuardError("efficacy iteration failed to reach its fixpoint");
}

SolveResult heuristic_solve(const CfpInstance& instance, Objective objective,
                            const SolveOptions& opts) {
    if (objective == Objective::efficacy && instance.n1() == 0) {
        throw DomainError("grouping efficacy undefined: instance has no ones");
    }
    if (opts.max_iters < 0) throw DomainError("max_iters must be >= 0");
    int m = instance.m();
    int p = instance.p();
    int cap = instance.cell_bound();
    std::mt19937_64 rng(opts.seed);
    std::vector<int32_t> mc(m), pc(p);
    for (int i = 0; i < m; ++i) mc[i] = static_cast<int32_t>(rng() % cap);
    for (int j = 0; j < p; ++j) pc[j] = static_cast<int32_t>(rng() % cap);

    CellCounts counts(cap, p);
    std::vector<int64_t> uw_cell(cap), row_bucket(cap);
    std::uint64_t sweeps = 0;
    bool want_f1 = objective == Objective::f1;

    // Scores are "bigger is better". For f1 a part/machine move changes
    // e + v by the (negated) score difference, so any score-improving move
    // improves f1; ties move to the smallest cell index, which strictly
    // shrinks the label vector and cannot cycle. For efficacy, scores
    // linearize it at the sweep's current value alpha/beta: the current
    // solution scores zero in total, so a sweep that accepts only strict
    // score improvements ends with strictly larger efficacy. Either way
    // the objective never worsens and the loop terminates.
    for (int iter = 0; iter < opts.max_iters; ++iter) {
        int64_t alpha = 0, beta = 0;
        if (!want_f1) {
            Rational lam = evaluate(instance, CfpSolution(mc, pc)).efficacy();
            alpha = lam.num();
            beta = lam.den();
        }
        bool changed = false;
        counts.rebuild(instance, mc, cap);
        for (int j = 0; j < p; ++j) {
            int64_t u = instance.col_weights()[j];
            auto part_score = [&](int k) {
                int64_t ones = counts.row(k)[j];
                return want_f1 ? u * (2 * ones - counts.wsum[k])
                               : u * (beta * ones - alpha * (counts.wsum[k] - ones));
            };
            int32_t best_k = 0;
            int64_t best_score = part_score(0);
            for (int k = 1; k < cap; ++k) {
                int64_t score = part_score(k);
                if (score > best_score) {
                    best_score = score;
                    best_k = static_cast<int32_t>(k);
                }
            }
            int64_t cur_score = part_score(pc[j]);
            bool take = best_score > cur_score ||
                        (want_f1 && best_score == cur_score && best_k < pc[j]);
            if (take && best_k != pc[j]) {
                pc[j] = best_k;
                changed = true;
            }
        }
        std::fill(uw_cell.begin(), uw_cell.end(), 0);
        for (int j = 0; j < p; ++j) uw_cell[pc[j]] += instance.col_weights()[j];
        for (int i = 0; i < m; ++i) {
            std::fill(row_bucket.begin(), row_bucket.end(), 0);
            const std::uint8_t* bits = instance.matrix().row(i);
            for (int j = 0; j < p; ++j) {
                if (bits[j]) row_bucket[pc[j]] += instance.col_weights()[j];
            }
            auto machine_score = [&](int k) {
                return want_f1 ? 2 * row_bucket[k] - uw_cell[k]
                               : beta * row_bucket[k] - alpha * (uw_cell[k] - row_bucket[k]);
            };
            int32_t best_k = 0;
            int64_t best_score = machine_score(0);
            for (int k = 1; k < cap; ++k) {
                int64_t score = machine_score(k);
                if (score > best_score) {
                    best_score = score;
                    best_k = static_cast<int32_t>(k);
                }
            }
            int64_t cur_score = machine_score(mc[i]);
            bool take = best_score > cur_score ||
                        (want_f1 && best_score == cur_score && best_k < mc[i]);
            if (take && best_k != mc[i]) {
                mc[i] = best_k;
                changed = true;
            }
        }
        ++sweeps;
        if (!changed) break;
    }
    return finish(instance, CfpSolution(std::move(mc), std::move(pc)),
                  Method::heuristic, sweeps);
}

Decision decide(const CfpInstance& instance, Objective objective,
                const Rational& threshold, Method method, const SolveOptions& opts) {
    if (method == Method::heuristic) {
        throw DomainError("threshold decisions need an exact method");
    }
    SolveResult res;
    if (method == Method::oracle) {
        res = oracle_solve(instance, objective, opts);
    } else if (objective == Objective::f1) {
        res = exact_solve_f1(instance, opts);
    } else {
        res = exact_solve_f2(instance, opts);
    }
    bool yes = objective == Objective::f1
                   ? !(threshold < Rational(res.report.f1, 1))
                   : !(res.report.efficacy() < threshold);
    if (!yes) return {false, std::nullopt};
    return {true, res.solution};
}

}  // namespace cfp::solvers
