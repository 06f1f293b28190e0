// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#include "cfp/bgep.hpp"

#include <algorithm>
#include <string>

#include "cfp/error.hpp"

namespace cfp::bgep {

namespace {

std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")";
}

void check_sorted_unique(std::vector<Edge>& edges, int left, int right,
                         const char* what) {
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.first < 0 || e.first >= left || e.second < 0 || e.second >= right) {
            throw DomainError(std::string(what) + " edge " + edge_str(e) +
                              " out of range");
        }
        if (i > 0 && edges[i - 1] == e) {
            throw DomainError(std::string("duplicate ") + what + " edge " +
                              edge_str(e));
        }
    }
}

}  // namespace

BgepInstance::BgepInstance(int left_, int right_, std::vector<Edge> edges_)
    : left(left_), right(right_), edges(std::move(edges_)) {
    if (left < 1 || right < 1) {
        throw DomainError("graph must have at least one vertex per side");
    }
    check_sorted_unique(edges, left, right, "graph");
}

BgepInstance cfp_to_bgep(const CfpInstance& instance) {
    if (!instance.unit_weights()) {
        throw DomainError("weighted instances have no edge-list form");
    }
    std::vector<Edge> edges;
    for (int i = 0; i < instance.m(); ++i) {
        for (int j = 0; j < instance.p(); ++j) {
            if (instance.matrix().at(i, j)) edges.emplace_back(i, j);
        }
    }
    return BgepInstance(instance.m(), instance.p(), std::move(edges));
}

CfpInstance bgep_to_cfp(const BgepInstance& graph) {
    BoolMatrix a(graph.left, graph.right);
    for (const Edge& e : graph.edges) a.set(e.first, e.second, 1);
    return CfpInstance(std::move(a));
}

EditSet solution_to_edit_set(const CfpInstance& instance, const CfpSolution& solution) {
    if (!instance.unit_weights()) {
        throw DomainError("weighted instances have no edge-list form");
    }
    if (!validate(instance, solution).empty()) {
        throw DomainError("solution is not valid for the instance");
    }
    EditSet edits;
    for (int i = 0; i < instance.m(); ++i) {
        for (int j = 0; j < instance.p(); ++j) {
            bool together = solution.machine_cell[i] == solution.part_cell[j];
            if (instance.matrix().at(i, j)) {
                if (!together) edits.removed.emplace_back(i, j);
            } else if (together) {
                edits.added.emplace_back(i, j);
            }
        }
    }
    return edits;  // row-major construction order is already sorted
}

BgepInstance apply_edits(const BgepInstance& graph, const EditSet& edits) {
    EditSet e = edits;
    check_sorted_unique(e.added, graph.left, graph.right, "added");
    check_sorted_unique(e.removed, graph.left, graph.right, "removed");
    std::vector<Edge> overlap;
    std::set_intersection(e.added.begin(), e.added.end(), e.removed.begin(),
                          e.removed.end(), std::back_inserter(overlap));
    if (!overlap.empty()) {
        throw DomainError("inconsistent edit set: edge " + edge_str(overlap[0]) +
                          " both added and removed");
    }
    for (const Edge& a : e.added) {
        if (std::binary_search(graph.edges.begin(), graph.edges.end(), a)) {
            throw DomainError("inconsistent edit set: added edge " + edge_str(a) +
                              " already present");
        }
    }
    std::vector<Edge> kept;
    std::set_difference(graph.edges.begin(), graph.edges.end(), e.removed.begin(),
                        e.removed.end(), std::back_inserter(kept));
    if (kept.size() != graph.edges.size() - e.removed.size()) {
        throw DomainError("inconsistent edit set: removed edge not present");
    }
    std::vector<Edge> merged;
    std::merge(kept.begin(), kept.end(), e.added.begin(), e.added.end(),
               std::back_inserter(merged));
    return BgepInstance(graph.left, graph.right, std::move(merged));
}

namespace {

// Union-find over left vertices [0, L) and right vertices [L, L+R).
struct Dsu {
    std::vector<int> parent;

    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

BiclusterCheck is_bicluster_graph(const BgepInstance& graph) {
    Dsu dsu(graph.left + graph.right);
    std::vector<int> degree(graph.left, 0);
    for (const Edge& e : graph.edges) {
        dsu.unite(e.first, graph.left + e.second);
        ++degree[e.first];
    }
    std::vector<int> right_count(graph.left + graph.right, 0);
    for (int v = 0; v < graph.right; ++v) {
        ++right_count[dsu.find(graph.left + v)];
    }
    // A component is a biclique iff every left vertex in it is adjacent to
    // all of its right vertices (degree can never exceed that count).
    BiclusterCheck check;
    for (int u = 0; u < graph.left; ++u) {
        if (degree[u] == right_count[dsu.find(u)]) continue;
        for (int v = 0; v < graph.right; ++v) {
            if (dsu.find(graph.left + v) != dsu.find(u)) continue;
            if (!std::binary_search(graph.edges.begin(), graph.edges.end(),
                                    Edge{u, v})) {
                check.missing_edge = Edge{u, v};
                return check;
            }
        }
    }
    check.ok = true;
    std::vector<bool> counted(graph.left + graph.right, false);
    for (const Edge& e : graph.edges) {
        int root = dsu.find(e.first);
        if (!counted[root]) {
            counted[root] = true;
            ++check.num_bicliques;
        }
    }
    return check;
}

CfpSolution edit_set_to_solution(const CfpInstance& instance, const EditSet& edits) {
    BgepInstance edited = apply_edits(cfp_to_bgep(instance), edits);
    BiclusterCheck check = is_bicluster_graph(edited);
    if (!check.ok) {
        throw DomainError("edit set does not produce a bicluster graph; missing "
                          "edge " + edge_str(*check.missing_edge));
    }
    int m = instance.m();
    int p = instance.p();
    Dsu dsu(m + p);
    std::vector<bool> has_left(m + p, false);
    std::vector<bool> has_right(m + p, false);
    for (const Edge& e : edited.edges) dsu.unite(e.first, m + e.second);
    for (int i = 0; i < m; ++i) has_left[dsu.find(i)] = true;
    for (int j = 0; j < p; ++j) has_right[dsu.find(m + j)] = true;

    // Cells: one per mixed component, then one shared by all isolated
    // machines and one shared by all isolated parts. One-sided sharing adds
    // no machine-part pairs, so it reproduces the edit set exactly.
    std::vector<std::int32_t> cell_of_root(m + p, -1);
    std::int32_t next = 0;
    bool iso_machines = false;
    bool iso_parts = false;
    for (int x = 0; x < m + p; ++x) {
        int root = dsu.find(x);
        if (has_left[root] && has_right[root]) {
            if (cell_of_root[root] < 0) cell_of_root[root] = next++;
        } else if (x < m) {
            iso_machines = true;
        } else {
            iso_parts = true;
        }
    }
    std::int32_t iso_machine_cell = iso_machines ? next++ : -1;
    std::int32_t iso_part_cell = iso_parts ? next++ : -1;
    if (next > instance.cell_bound()) {
        throw DomainError("edit set needs " + std::to_string(next) +
                          " cells, instance allows " +
                          std::to_string(instance.cell_bound()));
    }
    std::vector<std::int32_t> machines(m);
    std::vector<std::int32_t> parts(p);
    for (int i = 0; i < m; ++i) {
        int root = dsu.find(i);
        machines[i] = cell_of_root[root] >= 0 ? cell_of_root[root] : iso_machine_cell;
    }
    for (int j = 0; j < p; ++j) {
        int root = dsu.find(m + j);
        parts[j] = cell_of_root[root] >= 0 ? cell_of_root[root] : iso_part_cell;
    }
    return canonicalize(CfpSolution(std::move(machines), std::move(parts)));
}

}  // namespace cfp::bgep
