// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cfp/core.hpp"

namespace cfp::bgep {

using Edge = std::pair<std::int32_t, std::int32_t>;  // (left vertex, right vertex)

// Bipartite graph with `left` machine-side and `right` part-side vertices.
// Edges are kept sorted row-major and unique; construction validates.
struct BgepInstance {
    int left = 0;
    int right = 0;
    std::vector<Edge> edges;

    BgepInstance(int left, int right, std::vector<Edge> edges);
};

// Symmetric-difference edit: `added` are non-edges to insert (they become
// voids on the matrix side), `removed` are edges to delete (exceptions).
// Both lists sorted row-major, unique, disjoint.
struct EditSet {
    std::vector<Edge> added;
    std::vector<Edge> removed;

    std::size_t size() const { return added.size() + removed.size(); }
    bool operator==(const EditSet& o) const = default;
};

struct BiclusterCheck {
    bool ok = false;
    // components that contain at least one edge; isolated vertices are
    // permitted and not counted
    int num_bicliques = 0;
    // on failure, one vertex pair inside a connected component with no edge
    std::optional<Edge> missing_edge;
};

// Machine-part matrix as biadjacency. Weighted instances have no faithful
// edge-list form; non-unit weights throw DomainError.
BgepInstance cfp_to_bgep(const CfpInstance& instance);

// Biadjacency back to a unit-weight instance.
CfpInstance bgep_to_cfp(const BgepInstance& graph);

// Exceptions become removed edges, voids become added edges. The edit set
// always turns the graph into a disjoint union of bicliques.
EditSet solution_to_edit_set(const CfpInstance& instance, const CfpSolution& solution);

// Applies an edit set. DomainError when an added edge already exists, a
// removed edge does not, or the lists overlap.
BgepInstance apply_edits(const BgepInstance& graph, const EditSet& edits);

// Is the graph a disjoint union of bicliques (one-sided components and
// isolated vertices allowed)?
BiclusterCheck is_bicluster_graph(const BgepInstance& graph);

// Reverse direction of the correspondence: a solution whose exceptions and
// voids are exactly `edits`. Mixed components take one cell each in
// first-vertex order; isolated machines share one further cell, isolated
// parts another. DomainError when the edited graph is not a bicluster graph
// or needs more cells than the instance's bound.
CfpSolution edit_set_to_solution(const CfpInstance& instance, const EditSet& edits);

}  // namespace cfp::bgep
