#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "symbreak/determining.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/group.hpp"
#include "symbreak/refinement.hpp"

namespace symbreak {

struct DistinguishingOptions {
    int max_vertices = 12;
    int max_edges = 12;
    std::uint64_t budget_limit = 10'000'000;
    std::uint64_t group_enumeration_limit = 100'000;
};

struct DistResult {
    SearchStatus status = SearchStatus::exact;
    int value = -1;
};

namespace detail {

// Enumerates partitions of {0..count-1} into exactly `classes` blocks via
// restricted growth strings, quotienting out color permutations. Stops early
// when `test` accepts one.
template <typename Test>
bool any_partition(int count, int classes, SearchBudget& budget, Test&& test) {
    std::vector<int> assign(static_cast<std::size_t>(count), 0);
    auto rec = [&](auto&& self, int i, int used) -> bool {
        if (count - i < classes - used) return false;  // cannot reach the class count
        if (i == count) {
            if (used != classes) return false;
            budget.charge();
            return test(assign);
        }
        int limit = std::min(used + 1, classes);
        for (int c = 0; c <= limit - 1; ++c) {
            assign[i] = c;
            if (self(self, i + 1, std::max(used, c + 1))) return true;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

// Does some non-identity automorphism preserve every vertex color class?
// Small groups scan the enumerated element list; otherwise the color classes
// become the initial cells of a constrained search.
inline bool vertex_coloring_symmetric(const Graph& g,
                                      const std::optional<std::vector<Permutation>>& elements,
                                      const std::vector<int>& color, int classes,
                                      SearchBudget& budget) {
    if (elements) {
        for (const Permutation& p : *elements) {
            if (p.is_identity()) continue;
            bool preserved = true;
            for (int v = 0; v < g.vertex_count() && preserved; ++v)
                if (color[p(v)] != color[v]) preserved = false;
            if (preserved) return true;
        }
        return false;
    }
    std::vector<std::vector<int>> cells(static_cast<std::size_t>(classes));
    for (int v = 0; v < g.vertex_count(); ++v) cells[color[v]].push_back(v);
    SearchConstraints constraints;
    constraints.forbid_identity = true;
    return find_automorphism_with_cells(g, cells, cells, constraints, budget).has_value();
}

// Same for edge color classes. The vertex partition by incident color
// multiset only prunes; the exact condition sits in the leaf filter.
inline bool edge_coloring_symmetric(const Graph& g,
                                    const std::optional<std::vector<Permutation>>& elements,
                                    const std::vector<int>& color, SearchBudget& budget) {
    int m = g.edge_count();
    if (elements) {
        for (const Permutation& p : *elements) {
            if (p.is_identity()) continue;
            bool preserved = true;
            for (int k = 0; k < m && preserved; ++k) {
                const Edge& e = g.edges()[k];
                if (color[g.edge_index(Edge(p(e.u), p(e.v)))] != color[k]) preserved = false;
            }
            if (preserved) return true;
        }
        return false;
    }
    int n = g.vertex_count();
    std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
    for (int k = 0; k < m; ++k) {
        signature[g.edges()[k].u].push_back(color[k]);
        signature[g.edges()[k].v].push_back(color[k]);
    }
    for (auto& s : signature) std::sort(s.begin(), s.end());
    std::map<std::vector<int>, std::vector<int>> by_signature;
    for (int v = 0; v < n; ++v) by_signature[signature[v]].push_back(v);
    std::vector<std::vector<int>> cells;
    for (auto& [sig, members] : by_signature) cells.push_back(members);

    SearchConstraints constraints;
    constraints.forbid_identity = true;
    constraints.leaf_filter = [&g, &color, m](const Permutation& p) {
        for (int k = 0; k < m; ++k) {
            const Edge& e = g.edges()[k];
            if (color[g.edge_index(Edge(p(e.u), p(e.v)))] != color[k]) return false;
        }
        return true;
    };
    return find_automorphism_with_cells(g, cells, cells, constraints, budget).has_value();
}

}  // namespace detail

// Least number of vertex colors whose color classes are preserved only by
// the identity. Ascending color counts, partitions up to color permutation.
inline DistResult distinguishing_number(const Graph& g, const DistinguishingOptions& opts = {}) {
    if (g.vertex_count() > opts.max_vertices) return {SearchStatus::unknown, -1};
    int n = g.vertex_count();
    if (n == 0) return {SearchStatus::exact, 0};

    try {
        SearchBudget budget;
        budget.limit = opts.budget_limit;
        StabilizerChain chain = build_stabilizer_chain(g, budget);
        if (chain.order == 1) return {SearchStatus::exact, 1};
        auto elements = chain.elements(opts.group_enumeration_limit);

        for (int classes = 2; classes <= n; ++classes) {
            bool found = detail::any_partition(n, classes, budget, [&](const std::vector<int>& color) {
                return !detail::vertex_coloring_symmetric(g, elements, color, classes, budget);
            });
            if (found) return {SearchStatus::exact, classes};
        }
        throw InvariantViolation("all-distinct coloring failed to distinguish");
    } catch (const BudgetExceeded&) {
        return {SearchStatus::unknown, -1};
    }
}

// Least number of edge colors preserved only by the identity; undefined for
// the same graphs as the determining index.
inline DistResult distinguishing_index(const Graph& g, const DistinguishingOptions& opts = {}) {
    auto defined = det_index_definedness(g);
    if (!defined.defined) throw UndefinedDeterminingIndex(defined.reason);
    if (g.edge_count() > opts.max_edges) return {SearchStatus::unknown, -1};
    int m = g.edge_count();

    try {
        SearchBudget budget;
        budget.limit = opts.budget_limit;
        StabilizerChain chain = build_stabilizer_chain(g, budget);
        if (chain.order == 1) return {SearchStatus::exact, m == 0 ? 0 : 1};
        auto elements = chain.elements(opts.group_enumeration_limit);

        for (int classes = 1; classes <= m; ++classes) {
            bool found = detail::any_partition(m, classes, budget, [&](const std::vector<int>& color) {
                return !detail::edge_coloring_symmetric(g, elements, color, budget);
            });
            if (found) return {SearchStatus::exact, classes};
        }
        // Unreachable for defined inputs: all-distinct edge colors force every
        // edge to itself, and only the identity fixes every edge then.
        throw InvariantViolation("all-distinct edge coloring failed to distinguish");
    } catch (const BudgetExceeded&) {
        return {SearchStatus::unknown, -1};
    }
}

}  // namespace symbreak
