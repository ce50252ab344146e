#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "symbreak/graph.hpp"
#include "symbreak/permutation.hpp"
#include "symbreak/refinement.hpp"

namespace symbreak {

// Automorphism group description: generators plus the exact order.
struct GeneratorSet {
    int n = 0;
    std::vector<Permutation> generators;
    unsigned long long order = 1;
};

// Stabilizer chain over the base implied by the branching order: base[l] is
// the branch vertex at level l, transversal[l] holds one representative
// permutation per orbit point of base[l] in the pointwise stabilizer of
// base[0..l-1]. order = product of orbit sizes.
struct StabilizerChain {
    int n = 0;
    std::vector<int> base;
    std::vector<std::vector<std::pair<int, Permutation>>> transversals;
    unsigned long long order = 1;

    GeneratorSet generator_set() const {
        GeneratorSet out;
        out.n = n;
        out.order = order;
        for (const auto& level : transversals)
            for (const auto& [point, rep] : level)
                if (!rep.is_identity()) out.generators.push_back(rep);
        return out;
    }

    // Visits every group element exactly once via the coset decomposition
    // g = rep_0 . rep_1 . ... . rep_{k-1}, one representative per level.
    template <typename F>
    void for_each_element(F&& f) const {
        Permutation id = Permutation::identity(n);
        walk(0, id, f);
    }

    std::optional<std::vector<Permutation>> elements(std::uint64_t limit) const {
        if (order > limit) return std::nullopt;
        std::vector<Permutation> out;
        out.reserve(static_cast<std::size_t>(order));
        for_each_element([&](const Permutation& p) { out.push_back(p); });
        return out;
    }

private:
    template <typename F>
    void walk(std::size_t level, const Permutation& prefix, F&& f) const {
        if (level == transversals.size()) {
            f(prefix);
            return;
        }
        for (const auto& [point, rep] : transversals[level]) {
            if (rep.is_identity())
                walk(level + 1, prefix, f);
            else if (prefix.is_identity())
                walk(level + 1, rep, f);
            else
                walk(level + 1, compose(prefix, rep), f);
        }
    }
};

namespace detail {

inline void orbit_close(int base_point, const std::vector<Permutation>& gens,
                        std::vector<std::pair<int, Permutation>>& transversal) {
    // BFS closure over the level generators, keeping one witness per point.
    std::size_t head = 0;
    while (head < transversal.size()) {
        auto [point, rep] = transversal[head++];
        for (const Permutation& gen : gens) {
            int image = gen(point);
            bool known = false;
            for (const auto& [p, r] : transversal)
                if (p == image) {
                    known = true;
                    break;
                }
            if (!known) transversal.emplace_back(image, compose(gen, rep));
        }
    }
    (void)base_point;
}

}  // namespace detail

// Builds the stabilizer chain by individualization-refinement backtracking:
// the base is chosen by refining and branching on the smallest non-singleton
// cell (lowest vertex id first); at each level the orbit of the base vertex
// is determined by explicit searches, shortcut by closure under the
// generators already found.
inline StabilizerChain build_stabilizer_chain(const Graph& g, SearchBudget& budget) {
    StabilizerChain chain;
    chain.n = g.vertex_count();
    if (chain.n == 0) return chain;

    // Base sequence from single-sided refinement.
    std::vector<std::vector<int>> level_cells;
    {
        detail::OrderedPartition p = detail::unit_partition(chain.n);
        detail::refine_single(g, p);
        while (!p.discrete()) {
            std::size_t best = 0;
            bool found = false;
            for (std::size_t i = 0; i < p.cells.size(); ++i) {
                if (p.cells[i].size() == 1) continue;
                if (!found || p.cells[i].size() < p.cells[best].size() ||
                    (p.cells[i].size() == p.cells[best].size() &&
                     p.cells[i].front() < p.cells[best].front())) {
                    best = i;
                    found = true;
                }
            }
            int b = p.cells[best].front();
            chain.base.push_back(b);
            level_cells.push_back(p.cells[best]);
            detail::individualize(p, best, b);
            detail::refine_single(g, p);
        }
    }

    SearchConstraints none;
    for (std::size_t level = 0; level < chain.base.size(); ++level) {
        int b = chain.base[level];
        std::vector<Permutation> level_gens;
        std::vector<std::pair<int, Permutation>> transversal;
        transversal.emplace_back(b, Permutation::identity(chain.n));

        std::vector<std::pair<int, int>> seeds;
        for (std::size_t j = 0; j < level; ++j)
            seeds.emplace_back(chain.base[j], chain.base[j]);
        seeds.emplace_back(b, b);

        for (int candidate : level_cells[level]) {
            if (candidate == b) continue;
            bool known = false;
            for (const auto& [p, r] : transversal)
                if (p == candidate) {
                    known = true;
                    break;
                }
            if (known) continue;
            seeds.back().second = candidate;
            if (auto found = find_automorphism(g, seeds, none, budget)) {
                level_gens.push_back(*found);
                transversal.emplace_back(candidate, *found);
                detail::orbit_close(b, level_gens, transversal);
            }
        }

        std::sort(transversal.begin(), transversal.end(),
                  [](const auto& a, const auto& b2) { return a.first < b2.first; });
        unsigned long long orbit = transversal.size();
        if (chain.order > ~0ULL / orbit)
            throw BudgetExceeded("automorphism group order exceeds 64 bits");
        chain.order *= orbit;
        chain.transversals.push_back(std::move(transversal));
    }
    return chain;
}

// Full automorphism group of g. Exact order; deterministic generator list.
inline GeneratorSet automorphisms(const Graph& g) {
    SearchBudget budget;
    return build_stabilizer_chain(g, budget).generator_set();
}

// --- orbits ------------------------------------------------------------------

namespace detail {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

inline std::vector<std::vector<int>> group_classes(UnionFind& uf, int n) {
    std::vector<std::vector<int>> by_root(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) by_root[uf.find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& cls : by_root)
        if (!cls.empty()) out.push_back(std::move(cls));
    return out;
}

}  // namespace detail

// Orbit partition of the vertices under the generated group.
inline std::vector<std::vector<int>> vertex_orbits(const GeneratorSet& gens) {
    detail::UnionFind uf(gens.n);
    for (const Permutation& p : gens.generators)
        for (int v = 0; v < gens.n; ++v) uf.unite(v, p(v));
    return detail::group_classes(uf, gens.n);
}

// Orbit partition of the canonical edge ids under the generated group.
inline std::vector<std::vector<int>> edge_orbits(const Graph& g, const GeneratorSet& gens) {
    int m = g.edge_count();
    detail::UnionFind uf(m);
    for (const Permutation& p : gens.generators)
        for (int k = 0; k < m; ++k) {
            const Edge& e = g.edges()[k];
            int image = g.edge_index(Edge(p(e.u), p(e.v)));
            uf.unite(k, image);
        }
    return detail::group_classes(uf, m);
}

// Orbit partition of the arcs (ordered adjacent pairs), as indices into the
// arc list below.
inline std::vector<std::pair<int, int>> arcs_of(const Graph& g) {
    std::vector<std::pair<int, int>> arcs;
    for (const Edge& e : g.edges()) {
        arcs.emplace_back(e.u, e.v);
        arcs.emplace_back(e.v, e.u);
    }
    return arcs;
}

inline std::vector<std::vector<int>> arc_orbits(const Graph& g, const GeneratorSet& gens) {
    auto arcs = arcs_of(g);
    int a = static_cast<int>(arcs.size());
    detail::UnionFind uf(a);
    auto arc_index = [&](int u, int v) {
        int k = g.edge_index(Edge(u, v));
        return 2 * k + (u < v ? 0 : 1);
    };
    for (const Permutation& p : gens.generators)
        for (int i = 0; i < a; ++i) {
            auto [u, v] = arcs[i];
            uf.unite(i, arc_index(p(u), p(v)));
        }
    return detail::group_classes(uf, a);
}

}  // namespace symbreak
