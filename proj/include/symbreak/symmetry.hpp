#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "symbreak/graph.hpp"
#include "symbreak/group.hpp"
#include "symbreak/permutation.hpp"
#include "symbreak/refinement.hpp"

namespace symbreak {

inline bool is_automorphism(const Graph& g, const Permutation& p) {
    if (p.degree() != g.vertex_count()) return false;
    for (const Edge& e : g.edges())
        if (!g.adjacent(p(e.u), p(e.v))) return false;
    return true;
}

// Vertices that must stay fixed pointwise plus edges that must stay fixed as
// unordered pairs.
struct FixConstraint {
    std::vector<int> fixed_vertices;
    std::vector<Edge> fixed_edges;
};

// Stabilizer-triviality primitive: finds an automorphism respecting the
// constraint (optionally excluding the identity), or nothing when only the
// identity qualifies. Fixed vertices become leading singleton cells; fixed
// edges restrict each endpoint's image to the two endpoints.
inline std::optional<Permutation> find_constrained_automorphism(
    const Graph& g, const FixConstraint& c, bool forbid_identity,
    SearchBudget* budget = nullptr) {
    int n = g.vertex_count();
    for (int v : c.fixed_vertices)
        if (v < 0 || v >= n) throw InvalidArgument("fixed vertex out of range");
    for (const Edge& e : c.fixed_edges)
        if (!g.has_edge(e)) throw InvalidArgument("fixed edge not in graph");
    if (n == 0) return std::nullopt;

    SearchConstraints constraints;
    constraints.forbid_identity = forbid_identity;
    if (!c.fixed_edges.empty()) {
        constraints.allowed.assign(static_cast<std::size_t>(n), Bitset(n));
        for (auto& b : constraints.allowed)
            for (int v = 0; v < n; ++v) b.set(v);
        for (const Edge& e : c.fixed_edges) {
            Bitset pair(n);
            pair.set(e.u);
            pair.set(e.v);
            constraints.allowed[e.u] &= pair;
            constraints.allowed[e.v] &= pair;
        }
        std::vector<Edge> fixed_edges = c.fixed_edges;
        constraints.leaf_filter = [fixed_edges](const Permutation& p) {
            for (const Edge& e : fixed_edges) {
                Edge mapped(p(e.u), p(e.v));
                if (mapped != e) return false;
            }
            return true;
        };
    }

    std::vector<std::pair<int, int>> seeds;
    std::vector<int> fixed = c.fixed_vertices;
    std::sort(fixed.begin(), fixed.end());
    fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());
    for (int v : fixed) seeds.emplace_back(v, v);

    SearchBudget local;
    return find_automorphism(g, seeds, constraints, budget ? *budget : local);
}

// Is there an automorphism exchanging u and v?
inline bool exists_swap_automorphism(const Graph& g, int u, int v,
                                     SearchBudget* budget = nullptr) {
    if (u == v) return true;
    SearchConstraints none;
    SearchBudget local;
    return find_automorphism(g, {{u, v}, {v, u}}, none, budget ? *budget : local).has_value();
}

// Every neighbour of v can be swapped with v.
inline bool has_neighbor_swapping(const Graph& g, int v, SearchBudget* budget = nullptr) {
    if (v < 0 || v >= g.vertex_count()) throw InvalidArgument("vertex out of range");
    bool ok = true;
    g.neighbors(v).for_each([&](int u) {
        if (ok && !exists_swap_automorphism(g, u, v, budget)) ok = false;
    });
    return ok;
}

// Every edge admits an automorphism exchanging its endpoints. Checked edge by
// edge so the predicate is honest for disconnected graphs too; edgeless
// graphs are vacuously invariant.
inline bool is_edge_flip_invariant(const Graph& g, SearchBudget* budget = nullptr) {
    for (const Edge& e : g.edges())
        if (!exists_swap_automorphism(g, e.u, e.v, budget)) return false;
    return true;
}

inline bool is_vertex_transitive(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return vertex_orbits(automorphisms(g)).size() == 1;
}

inline bool is_edge_transitive(const Graph& g) {
    if (g.edge_count() == 0) return true;
    return edge_orbits(g, automorphisms(g)).size() == 1;
}

inline bool is_arc_transitive(const Graph& g) {
    if (g.edge_count() == 0) return true;
    return arc_orbits(g, automorphisms(g)).size() == 1;
}

// For a connected graph the first three fields are provably equal, and when
// they hold the graph is vertex-transitive. The check recomputes each field
// independently and throws if the chain is violated.
struct FlipEquivalenceReport {
    bool some_vertex_ns = false;
    bool all_vertices_ns = false;
    bool edge_flip_invariant = false;
    bool vertex_transitive = false;
};

inline FlipEquivalenceReport check_flip_equivalences(const Graph& g,
                                                     SearchBudget* budget = nullptr) {
    if (g.vertex_count() == 0 || !is_connected(g))
        throw InvalidArgument("flip equivalence check needs a nonempty connected graph");
    FlipEquivalenceReport r;
    int n = g.vertex_count();
    r.all_vertices_ns = true;
    for (int v = 0; v < n; ++v) {
        bool ns = has_neighbor_swapping(g, v, budget);
        r.some_vertex_ns = r.some_vertex_ns || ns;
        r.all_vertices_ns = r.all_vertices_ns && ns;
    }
    r.edge_flip_invariant = is_edge_flip_invariant(g, budget);
    r.vertex_transitive = is_vertex_transitive(g);

    if (r.some_vertex_ns != r.all_vertices_ns || r.all_vertices_ns != r.edge_flip_invariant)
        throw InvariantViolation("neighbor-swapping equivalence chain violated");
    if (r.edge_flip_invariant && !r.vertex_transitive)
        throw InvariantViolation("edge-flip-invariant graph is not vertex-transitive");
    return r;
}

enum class TwinKind { adjacent, nonadjacent };

struct TwinPair {
    int u = 0;
    int v = 0;
    TwinKind kind = TwinKind::nonadjacent;
};

// All pairs with identical open neighborhoods (nonadjacent twins) or
// identical closed neighborhoods (adjacent twins), found by sorting the
// neighborhood bitsets. The defining transposition of every reported pair is
// checked to be an automorphism.
inline std::vector<TwinPair> find_twins(const Graph& g) {
    int n = g.vertex_count();
    std::vector<TwinPair> out;

    auto collect = [&](bool closed) {
        std::vector<std::pair<Bitset, int>> keyed;
        keyed.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            Bitset key = g.neighbors(v);
            if (closed) key.set(v);
            keyed.emplace_back(std::move(key), v);
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < keyed.size();) {
            std::size_t j = i;
            while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
            for (std::size_t a = i; a < j; ++a)
                for (std::size_t b = a + 1; b < j; ++b) {
                    int u = std::min(keyed[a].second, keyed[b].second);
                    int v = std::max(keyed[a].second, keyed[b].second);
                    Permutation swap = Permutation::from_cycles(n, {{u, v}});
                    if (!is_automorphism(g, swap))
                        throw InvariantViolation("twin transposition is not an automorphism");
                    out.push_back({u, v, closed ? TwinKind::adjacent : TwinKind::nonadjacent});
                }
            i = j;
        }
    };

    collect(false);
    collect(true);
    std::sort(out.begin(), out.end(), [](const TwinPair& a, const TwinPair& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    return out;
}

// Isomorphism test via a block-exchanging automorphism of the disjoint union:
// the initial cell correspondence forces image(A) = B and image(B) = A.
inline bool is_isomorphic(const Graph& a, const Graph& b, SearchBudget* budget = nullptr) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (a.vertex_count() == 0) return true;

    std::vector<int> deg_a, deg_b;
    for (int v = 0; v < a.vertex_count(); ++v) deg_a.push_back(a.degree(v));
    for (int v = 0; v < b.vertex_count(); ++v) deg_b.push_back(b.degree(v));
    std::sort(deg_a.begin(), deg_a.end());
    std::sort(deg_b.begin(), deg_b.end());
    if (deg_a != deg_b) return false;

    Graph u = disjoint_union({a, b});
    int na = a.vertex_count();
    std::vector<int> block_a, block_b;
    for (int v = 0; v < na; ++v) block_a.push_back(v);
    for (int v = na; v < u.vertex_count(); ++v) block_b.push_back(v);

    SearchConstraints none;
    SearchBudget local;
    return find_automorphism_with_cells(u, {block_a, block_b}, {block_b, block_a}, none,
                                        budget ? *budget : local)
        .has_value();
}

}  // namespace symbreak
