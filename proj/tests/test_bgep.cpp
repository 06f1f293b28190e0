// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#include "cfp/bgep.hpp"

#include <cstdint>
#include <random>

#include "cfp/error.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using cfp::BoolMatrix;
using cfp::CfpInstance;
using cfp::CfpSolution;
namespace bgep = cfp::bgep;

TEST_CASE("graph construction sorts and validates") {
    bgep::BgepInstance g(2, 3, {{1, 2}, {0, 0}, {1, 0}});
    CHECK(g.edges == std::vector<bgep::Edge>{{0, 0}, {1, 0}, {1, 2}});
    CHECK_THROWS_AS(bgep::BgepInstance(2, 3, {{0, 0}, {0, 0}}), cfp::DomainError);
    CHECK_THROWS_AS(bgep::BgepInstance(2, 3, {{2, 0}}), cfp::DomainError);
    CHECK_THROWS_AS(bgep::BgepInstance(2, 3, {{0, 3}}), cfp::DomainError);
    CHECK_THROWS_AS(bgep::BgepInstance(0, 3, {}), cfp::DomainError);
}

TEST_CASE("matrix and biadjacency round trip") {
    CfpInstance t1 = testfix::table1();
    bgep::BgepInstance g = bgep::cfp_to_bgep(t1);
    CHECK(g.left == 5);
    CHECK(g.right == 7);
    CHECK(g.edges.size() == static_cast<std::size_t>(t1.n1()));
    CHECK(bgep::bgep_to_cfp(g) == t1);

    CfpInstance weighted(BoolMatrix(2, 2, {1, 0, 0, 1}), {2, 1}, {1, 1});
    CHECK_THROWS_AS(bgep::cfp_to_bgep(weighted), cfp::DomainError);
}

TEST_CASE("solution edits: exceptions removed, voids added") {
    CfpInstance t1 = testfix::table1();
    bgep::EditSet edits = bgep::solution_to_edit_set(t1, testfix::table2_solution());
    CHECK(static_cast<std::int64_t>(edits.removed.size()) == testfix::kTable1E);
    CHECK(static_cast<std::int64_t>(edits.added.size()) == testfix::kTable1V);
    CHECK(static_cast<std::int64_t>(edits.size()) == testfix::kTable1F1);

    // the edited graph is a union of one biclique per cell
    bgep::BgepInstance edited = bgep::apply_edits(bgep::cfp_to_bgep(t1), edits);
    bgep::BiclusterCheck check = bgep::is_bicluster_graph(edited);
    CHECK(check.ok);
    CHECK(check.num_bicliques == 3);
}

TEST_CASE("apply_edits validates consistency") {
    bgep::BgepInstance g(2, 2, {{0, 0}, {1, 1}});
    CHECK_THROWS_AS(bgep::apply_edits(g, {{{0, 0}}, {}}), cfp::DomainError);     // add existing
    CHECK_THROWS_AS(bgep::apply_edits(g, {{}, {{0, 1}}}), cfp::DomainError);     // remove absent
    CHECK_THROWS_AS(bgep::apply_edits(g, {{{0, 1}}, {{0, 1}}}), cfp::DomainError);
    bgep::BgepInstance edited = bgep::apply_edits(g, {{{0, 1}}, {{1, 1}}});
    CHECK(edited.edges == std::vector<bgep::Edge>{{0, 0}, {0, 1}});
}

TEST_CASE("bicluster recognition") {
    // path of length two is one biclique
    CHECK(bgep::is_bicluster_graph(bgep::BgepInstance(2, 1, {{0, 0}, {1, 0}})).ok);
    CHECK(bgep::is_bicluster_graph(bgep::BgepInstance(2, 1, {{0, 0}, {1, 0}})).num_bicliques == 1);
    // path of length three is connected but misses an edge
    bgep::BiclusterCheck p3 =
        bgep::is_bicluster_graph(bgep::BgepInstance(2, 2, {{0, 0}, {1, 0}, {1, 1}}));
    CHECK(!p3.ok);
    CHECK(p3.missing_edge == bgep::Edge{0, 1});
    // empty graph: zero bicliques, trivially fine
    bgep::BiclusterCheck empty = bgep::is_bicluster_graph(bgep::BgepInstance(2, 2, {}));
    CHECK(empty.ok);
    CHECK(empty.num_bicliques == 0);
}

TEST_CASE("edit set to solution round trip") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 120; ++round) {
        int m = 1 + static_cast<int>(rng() % 4);
        int p = 1 + static_cast<int>(rng() % 4);
        CfpInstance inst = testfix::random_instance(rng, m, p);
        CfpSolution sol = cfp::canonicalize(testfix::random_solution(rng, inst));
        bgep::EditSet edits = bgep::solution_to_edit_set(inst, sol);
        CfpSolution rebuilt = bgep::edit_set_to_solution(inst, edits);
        CHECK(cfp::validate(inst, rebuilt).empty());
        // the rebuilt solution reproduces the edit set exactly, so it has
        // the same e and v even when the cell split differs from sol's
        CHECK(bgep::solution_to_edit_set(inst, rebuilt) == edits);
    }
}

TEST_CASE("edit set to solution respects the cell bound") {
    // 2 x 3 zero matrix, bound 2: two mixed components plus an isolated
    // part would need three cells
    CfpInstance inst(BoolMatrix(2, 3, {0, 0, 0, 0, 0, 0}));
    bgep::EditSet two_mixed{{{0, 0}, {1, 1}}, {}};
    CHECK_THROWS_AS(bgep::edit_set_to_solution(inst, two_mixed), cfp::DomainError);
    // with parts 0 and 1 covered, part 2 still isolated: over the bound
    bgep::EditSet ok_mixed{{{0, 0}, {0, 1}, {1, 2}}, {}};
    CfpSolution sol = bgep::edit_set_to_solution(inst, ok_mixed);
    CHECK(cfp::validate(inst, sol).empty());
    CHECK(sol.num_cells == 2);

    // a non-bicluster edit set is rejected
    CfpInstance ident(BoolMatrix(2, 2, {1, 0, 0, 1}));
    bgep::EditSet none{{}, {}};
    CHECK(bgep::is_bicluster_graph(bgep::cfp_to_bgep(ident)).ok);
    bgep::EditSet bad{{{0, 1}}, {}};
    CHECK_THROWS_AS(bgep::edit_set_to_solution(ident, bad), cfp::DomainError);
}
