#pragma once

#include <algorithm>
#include <compare>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "symbreak/bitset.hpp"
#include "symbreak/errors.hpp"

namespace symbreak {

// Unordered edge stored with u < v; the canonical order for edge ids.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
        if (a == b) throw InvalidArgument("self-loop edge");
    }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertices 0..n-1. Adjacency is kept as
// one bitset per vertex, so neighborhood comparisons and refinement counts
// are O(n/64). Safe to share across threads once constructed.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : Graph(n, std::vector<std::pair<int, int>>{}) {}

    Graph(int n, const std::vector<std::pair<int, int>>& edge_list, std::string name = "")
        : n_(n), name_(std::move(name)) {
        if (n < 0) throw InvalidArgument("negative vertex count");
        adj_.assign(static_cast<std::size_t>(n), Bitset(n));
        for (auto [a, b] : edge_list) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw InvalidArgument("edge endpoint out of range");
            if (a == b) throw InvalidArgument("self-loop edge");
            adj_[a].set(b);
            adj_[b].set(a);
        }
        for (int u = 0; u < n; ++u)
            adj_[u].for_each([&](int v) {
                if (u < v) edges_.emplace_back(u, v);
            });
        std::sort(edges_.begin(), edges_.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool adjacent(int u, int v) const {
        return u != v && adj_[u].test(v);
    }

    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    // Edges sorted lexicographically; the index in this list is the edge id.
    const std::vector<Edge>& edges() const { return edges_; }

    int edge_index(const Edge& e) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    bool has_edge(const Edge& e) const { return e.v < n_ && adjacent(e.u, e.v); }

    const std::string& name() const { return name_; }
    Graph with_name(std::string name) const {
        Graph g = *this;
        g.name_ = std::move(name);
        return g;
    }

    // Structural equality; names are labels only.
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
    std::vector<Edge> edges_;
    std::string name_;
};

constexpr int kUnreachable = -1;

// --- family constructors ---------------------------------------------------

inline Graph empty_graph(int n) {
    if (n < 0) throw InvalidArgument("empty graph needs n >= 0");
    return Graph(n, {}, "N_" + std::to_string(n));
}

inline Graph path_graph(int n) {
    if (n < 1) throw InvalidArgument("path needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e, "P_" + std::to_string(n));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw InvalidArgument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e, "C_" + std::to_string(n));
}

inline Graph complete_graph(int n) {
    if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e, "K_" + std::to_string(n));
}

// Partite sets {0..n-1} and {n..n+m-1}.
inline Graph complete_bipartite(int n, int m) {
    if (n < 1 || m < 1) throw InvalidArgument("complete bipartite needs n, m >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) e.emplace_back(i, n + j);
    return Graph(n + m, e, "K_{" + std::to_string(n) + "," + std::to_string(m) + "}");
}

// K_{1,n}: hub 0, leaves 1..n.
inline Graph star_graph(int n) {
    if (n < 1) throw InvalidArgument("star needs n >= 1");
    return complete_bipartite(1, n).with_name("K_{1," + std::to_string(n) + "}");
}

// Vertex id is the integer value of the n-bit string; bit j is coordinate j.
// Adjacent iff the ids differ in exactly one bit.
inline Graph hypercube(int n) {
    if (n < 1 || n > 16) throw InvalidArgument("hypercube dimension must be in 1..16");
    int size = 1 << n;
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < size; ++v)
        for (int j = 0; j < n; ++j)
            if (!(v & (1 << j))) e.emplace_back(v, v | (1 << j));
    return Graph(size, e, "Q_" + std::to_string(n));
}

enum class FamilyKind { path, cycle, complete, complete_bipartite, star, empty };

inline Graph build_family(FamilyKind kind, const std::vector<long long>& params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k) throw InvalidArgument("wrong number of family parameters");
    };
    switch (kind) {
        case FamilyKind::path: need(1); return path_graph(static_cast<int>(params[0]));
        case FamilyKind::cycle: need(1); return cycle_graph(static_cast<int>(params[0]));
        case FamilyKind::complete: need(1); return complete_graph(static_cast<int>(params[0]));
        case FamilyKind::complete_bipartite:
            need(2);
            return complete_bipartite(static_cast<int>(params[0]), static_cast<int>(params[1]));
        case FamilyKind::star: need(1); return star_graph(static_cast<int>(params[0]));
        case FamilyKind::empty: need(1); return empty_graph(static_cast<int>(params[0]));
    }
    throw InvalidArgument("unknown family kind");
}

// --- graph operators --------------------------------------------------------

inline Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) e.emplace_back(u, v);
    return Graph(n, e, g.name().empty() ? "" : "complement(" + g.name() + ")");
}

// Blocks keep their internal labels, offset by the sizes of earlier blocks.
inline Graph disjoint_union(const std::vector<Graph>& parts) {
    if (parts.empty()) throw InvalidArgument("disjoint union of nothing");
    int total = 0;
    std::vector<std::pair<int, int>> e;
    for (const Graph& g : parts) {
        for (const Edge& ed : g.edges()) e.emplace_back(total + ed.u, total + ed.v);
        total += g.vertex_count();
    }
    return Graph(total, e);
}

// V(g) keeps its labels, V(h) is shifted by |V(g)|; every cross pair is an edge.
inline Graph join(const Graph& g, const Graph& h) {
    int ng = g.vertex_count();
    int nh = h.vertex_count();
    std::vector<std::pair<int, int>> e;
    for (const Edge& ed : g.edges()) e.emplace_back(ed.u, ed.v);
    for (const Edge& ed : h.edges()) e.emplace_back(ng + ed.u, ng + ed.v);
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < nh; ++b) e.emplace_back(a, ng + b);
    return Graph(ng + nh, e);
}

// Row-major pair labeling: (u, v) -> u * |V(h)| + v, u from g.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    int ng = g.vertex_count();
    int nh = h.vertex_count();
    std::vector<std::pair<int, int>> e;
    auto id = [&](int u, int v) { return u * nh + v; };
    for (int u = 0; u < ng; ++u)
        for (const Edge& ed : h.edges()) e.emplace_back(id(u, ed.u), id(u, ed.v));
    for (int v = 0; v < nh; ++v)
        for (const Edge& ed : g.edges()) e.emplace_back(id(ed.u, v), id(ed.v, v));
    return Graph(ng * nh, e);
}

// Vertex k of the result is g.edges()[k]; adjacent iff the edges share an
// endpoint.
inline Graph line_graph(const Graph& g) {
    const auto& es = g.edges();
    if (es.empty()) throw InvalidArgument("line graph of an edgeless graph");
    int m = static_cast<int>(es.size());
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Edge& a = es[i];
            const Edge& b = es[j];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) e.emplace_back(i, j);
        }
    return Graph(m, e, g.name().empty() ? "" : "L(" + g.name() + ")");
}

// --- traversal --------------------------------------------------------------

// BFS distances from v; kUnreachable marks vertices in other components.
inline std::vector<int> distances_from(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw InvalidArgument("source vertex out of range");
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
    std::queue<int> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        g.neighbors(u).for_each([&](int w) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        });
    }
    return dist;
}

inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            g.neighbors(u).for_each([&](int w) {
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

// Subgraph induced on `vertices` (sorted or not); vertex k of the result is
// vertices[k] after sorting.
inline Graph induced_subgraph(const Graph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    std::vector<std::pair<int, int>> e;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                e.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(static_cast<int>(vertices.size()), e);
}

inline bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

// Classical center by iterative leaf stripping: one vertex, or two adjacent
// ones. Every automorphism maps this set to itself.
inline std::vector<int> tree_center(const Graph& g) {
    if (!is_tree(g)) throw InvalidArgument("tree center of a non-tree");
    int n = g.vertex_count();
    if (n <= 2) {
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) all[i] = i;
        return all;
    }
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --remaining;
            g.neighbors(v).for_each([&](int w) {
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
            });
        }
        layer = std::move(next);
    }
    std::vector<int> center;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) center.push_back(v);
    return center;
}

}  // namespace symbreak
