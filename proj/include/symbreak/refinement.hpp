#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "symbreak/errors.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/permutation.hpp"

namespace symbreak {

// Shared node counter for the backtracking searches. Every expanded search
// node and every tested candidate subset charges one unit.
struct SearchBudget {
    std::uint64_t limit = 10'000'000;
    std::uint64_t used = 0;

    void charge(std::uint64_t amount = 1) {
        used += amount;
        if (used > limit) throw BudgetExceeded("search node budget exhausted");
    }
};

namespace detail {

// Ordered partition of {0..n-1}. Cell order is load-bearing: the search pairs
// source cell i with target cell i, so both sides must split identically.
struct OrderedPartition {
    std::vector<std::vector<int>> cells;

    bool discrete() const {
        for (const auto& c : cells)
            if (c.size() != 1) return false;
        return true;
    }

    int vertex_count() const {
        int n = 0;
        for (const auto& c : cells) n += static_cast<int>(c.size());
        return n;
    }
};

inline OrderedPartition unit_partition(int n) {
    OrderedPartition p;
    if (n > 0) {
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) all[i] = i;
        p.cells.push_back(std::move(all));
    }
    return p;
}

// Splits `cell` by the neighbour count of each member inside `splitter`;
// fragments come out ordered by ascending count, members sorted by id.
inline std::vector<std::pair<int, std::vector<int>>> split_by_count(
    const Graph& g, const std::vector<int>& cell, const Bitset& splitter) {
    std::map<int, std::vector<int>> groups;
    for (int v : cell) groups[g.neighbors(v).count_and(splitter)].push_back(v);
    std::vector<std::pair<int, std::vector<int>>> out;
    out.reserve(groups.size());
    for (auto& [count, members] : groups) out.emplace_back(count, std::move(members));
    return out;
}

// Lockstep equitable refinement of a source/target pair. Returns false when
// the split signatures diverge, i.e. no automorphism can map source cells
// onto target cells position by position. Deterministic: FIFO worklist,
// fragments appended in ascending-count order.
inline bool refine_pair(const Graph& g, OrderedPartition& src, OrderedPartition& tgt) {
    int n = g.vertex_count();
    std::vector<std::size_t> work;
    for (std::size_t i = 0; i < src.cells.size(); ++i) work.push_back(i);

    std::size_t head = 0;
    while (head < work.size()) {
        std::size_t s = work[head++];
        Bitset splitter_src(n);
        Bitset splitter_tgt(n);
        for (int v : src.cells[s]) splitter_src.set(v);
        for (int v : tgt.cells[s]) splitter_tgt.set(v);

        std::size_t cell_count = src.cells.size();
        for (std::size_t c = 0; c < cell_count; ++c) {
            auto src_groups = split_by_count(g, src.cells[c], splitter_src);
            auto tgt_groups = split_by_count(g, tgt.cells[c], splitter_tgt);
            if (src_groups.size() != tgt_groups.size()) return false;
            for (std::size_t k = 0; k < src_groups.size(); ++k)
                if (src_groups[k].first != tgt_groups[k].first ||
                    src_groups[k].second.size() != tgt_groups[k].second.size())
                    return false;
            if (src_groups.size() == 1) continue;

            src.cells[c] = std::move(src_groups[0].second);
            tgt.cells[c] = std::move(tgt_groups[0].second);
            work.push_back(c);
            for (std::size_t k = 1; k < src_groups.size(); ++k) {
                src.cells.push_back(std::move(src_groups[k].second));
                tgt.cells.push_back(std::move(tgt_groups[k].second));
                work.push_back(src.cells.size() - 1);
            }
        }
    }
    return true;
}

// Single-sided refinement with the same splitting discipline; used to choose
// the base sequence for the stabilizer chain.
inline void refine_single(const Graph& g, OrderedPartition& p) {
    OrderedPartition copy = p;
    bool ok = refine_pair(g, p, copy);
    (void)ok;  // identical sides cannot mismatch
}

// Splits cell `c` so that `v` becomes its own leading singleton cell.
// The remainder (if any) keeps position c; the singleton is inserted at c.
inline void individualize(OrderedPartition& p, std::size_t c, int v) {
    std::vector<int> rest;
    rest.reserve(p.cells[c].size() - 1);
    for (int x : p.cells[c])
        if (x != v) rest.push_back(x);
    p.cells[c] = {v};
    if (!rest.empty())
        p.cells.insert(p.cells.begin() + static_cast<std::ptrdiff_t>(c) + 1, std::move(rest));
}

}  // namespace detail

// Optional restrictions for the automorphism search.
struct SearchConstraints {
    // allowed[v] = permitted images of v. Empty vector means unconstrained.
    std::vector<Bitset> allowed;
    bool forbid_identity = false;
    // Extra acceptance predicate applied at discrete leaves.
    std::function<bool(const Permutation&)> leaf_filter;

    bool has_masks() const { return !allowed.empty(); }
};

namespace detail {

// Backtracking search for one automorphism of g compatible with an aligned
// source/target partition pair and the given constraints. Branches on the
// most constrained vertex available; candidate images are tried in ascending
// id order, so the returned witness is the minimal one in this branch order.
class AutomorphismSearch {
public:
    AutomorphismSearch(const Graph& g, SearchBudget& budget, const SearchConstraints& constraints)
        : g_(g), budget_(budget), constraints_(constraints) {}

    std::optional<Permutation> run(OrderedPartition src, OrderedPartition tgt) {
        return dfs(src, tgt);
    }

private:
    const Graph& g_;
    SearchBudget& budget_;
    const SearchConstraints& constraints_;

    bool masks_feasible(const OrderedPartition& src, const OrderedPartition& tgt) const {
        int n = g_.vertex_count();
        for (std::size_t i = 0; i < src.cells.size(); ++i) {
            Bitset tgt_bits(n);
            bool built = false;
            for (int v : src.cells[i]) {
                const Bitset& allowed = constraints_.allowed[v];
                if (allowed.count() == n) continue;
                if (!built) {
                    for (int w : tgt.cells[i]) tgt_bits.set(w);
                    built = true;
                }
                if (!allowed.intersects(tgt_bits)) return false;
            }
        }
        return true;
    }

    std::optional<Permutation> dfs(OrderedPartition& src, OrderedPartition& tgt) {
        budget_.charge();
        if (!refine_pair(g_, src, tgt)) return std::nullopt;
        if (constraints_.has_masks() && !masks_feasible(src, tgt)) return std::nullopt;

        if (src.discrete()) return try_leaf(src, tgt);

        // Branch cell: a constrained vertex with the fewest viable images if
        // any, otherwise the smallest cell containing the lowest vertex id.
        std::size_t branch_cell = src.cells.size();
        int branch_vertex = -1;
        if (constraints_.has_masks()) {
            int best_options = g_.vertex_count() + 1;
            for (std::size_t i = 0; i < src.cells.size(); ++i) {
                if (src.cells[i].size() == 1) continue;
                Bitset tgt_bits(g_.vertex_count());
                for (int w : tgt.cells[i]) tgt_bits.set(w);
                for (int v : src.cells[i]) {
                    if (constraints_.allowed[v].count() == g_.vertex_count()) continue;
                    int options = constraints_.allowed[v].count_and(tgt_bits);
                    if (options < best_options) {
                        best_options = options;
                        branch_cell = i;
                        branch_vertex = v;
                    }
                }
            }
        }
        if (branch_vertex == -1) {
            std::size_t best = 0;
            bool found = false;
            for (std::size_t i = 0; i < src.cells.size(); ++i) {
                if (src.cells[i].size() == 1) continue;
                if (!found || src.cells[i].size() < src.cells[best].size() ||
                    (src.cells[i].size() == src.cells[best].size() &&
                     src.cells[i].front() < src.cells[best].front())) {
                    best = i;
                    found = true;
                }
            }
            branch_cell = best;
            branch_vertex = src.cells[best].front();
        }

        for (int candidate : tgt.cells[branch_cell]) {
            if (constraints_.has_masks() && !constraints_.allowed[branch_vertex].test(candidate))
                continue;
            OrderedPartition src_child = src;
            OrderedPartition tgt_child = tgt;
            individualize(src_child, branch_cell, branch_vertex);
            individualize(tgt_child, branch_cell, candidate);
            if (auto r = dfs(src_child, tgt_child)) return r;
        }
        return std::nullopt;
    }

    std::optional<Permutation> try_leaf(const OrderedPartition& src, const OrderedPartition& tgt) {
        std::vector<int> image(static_cast<std::size_t>(g_.vertex_count()));
        for (std::size_t i = 0; i < src.cells.size(); ++i)
            image[src.cells[i][0]] = tgt.cells[i][0];
        Permutation p(std::move(image));

        if (constraints_.forbid_identity && p.is_identity()) return std::nullopt;
        // Refinement only matches invariants; the map itself must be checked.
        for (const Edge& e : g_.edges())
            if (!g_.adjacent(p(e.u), p(e.v))) return std::nullopt;
        if (constraints_.has_masks())
            for (int v = 0; v < g_.vertex_count(); ++v)
                if (!constraints_.allowed[v].test(p(v))) return std::nullopt;
        if (constraints_.leaf_filter && !constraints_.leaf_filter(p)) return std::nullopt;
        return p;
    }
};

}  // namespace detail

// Searches for one automorphism subject to `constraints`, with optional
// forced seed pairs (source vertex -> target vertex). Seeds become leading
// singleton cells, so a seed (a, b) forces p(a) = b.
inline std::optional<Permutation> find_automorphism(
    const Graph& g, const std::vector<std::pair<int, int>>& seeds,
    const SearchConstraints& constraints, SearchBudget& budget) {
    int n = g.vertex_count();
    if (n == 0) return std::nullopt;

    detail::OrderedPartition src;
    detail::OrderedPartition tgt;
    std::vector<char> in_src(static_cast<std::size_t>(n), 0);
    std::vector<char> in_tgt(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : seeds) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw InvalidArgument("seed vertex out of range");
        if (in_src[a] || in_tgt[b]) throw InvalidArgument("conflicting seed pairs");
        in_src[a] = 1;
        in_tgt[b] = 1;
        src.cells.push_back({a});
        tgt.cells.push_back({b});
    }
    std::vector<int> rest_src;
    std::vector<int> rest_tgt;
    for (int v = 0; v < n; ++v) {
        if (!in_src[v]) rest_src.push_back(v);
        if (!in_tgt[v]) rest_tgt.push_back(v);
    }
    if (!rest_src.empty()) {
        src.cells.push_back(std::move(rest_src));
        tgt.cells.push_back(std::move(rest_tgt));
    }

    detail::AutomorphismSearch search(g, budget, constraints);
    return search.run(std::move(src), std::move(tgt));
}

// Convenience for searches on a disjoint union with prescribed block images:
// initial cells are given explicitly on both sides.
inline std::optional<Permutation> find_automorphism_with_cells(
    const Graph& g, std::vector<std::vector<int>> src_cells,
    std::vector<std::vector<int>> tgt_cells, const SearchConstraints& constraints,
    SearchBudget& budget) {
    detail::OrderedPartition src;
    detail::OrderedPartition tgt;
    src.cells = std::move(src_cells);
    tgt.cells = std::move(tgt_cells);
    detail::AutomorphismSearch search(g, budget, constraints);
    return search.run(std::move(src), std::move(tgt));
}

}  // namespace symbreak
