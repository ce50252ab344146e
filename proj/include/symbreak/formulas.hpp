#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "symbreak/determining.hpp"
#include "symbreak/errors.hpp"
#include "symbreak/graph.hpp"

namespace symbreak {

// ceil(log2(n)) by bit length; exact at powers of two, where the hypercube
// index formula switches regime.
inline int ceil_log2(long long n) {
    if (n < 1) throw InvalidArgument("ceil_log2 needs n >= 1");
    int k = 0;
    while ((1LL << k) < n) ++k;
    return k;
}

// det'(Q_n) for n >= 3, computed in two algebraically equivalent forms that
// are asserted against each other:
//   threshold: k+1 when n - k > 2^(k-1), else k          (k = ceil_log2 n)
//   interval:  k   when 2^(k-1) < n <= 2^(k-1) + k, else k+1
inline int qn_det_index(long long n) {
    if (n < 3) throw InvalidArgument("hypercube index formula needs n >= 3");
    long long k = ceil_log2(n);
    int threshold_form = (n - k > (1LL << (k - 1))) ? static_cast<int>(k + 1)
                                                    : static_cast<int>(k);
    int interval_form = (n <= (1LL << (k - 1)) + k) ? static_cast<int>(k)
                                                    : static_cast<int>(k + 1);
    if (threshold_form != interval_form)
        throw InvariantViolation("hypercube index forms disagree at n = " + std::to_string(n));
    return threshold_form;
}

// 2^(ceil_log2(n) - 2) < n/2 <= n - ceil_log2(n) + 1, in exact integers:
// the left part is 2^(k-1) < n and the right part is n <= 2(n - k + 1).
// Holds for every n >= 3.
inline bool log2_gap_inequality_holds(long long n) {
    if (n < 3) throw InvalidArgument("inequality check needs n >= 3");
    long long k = ceil_log2(n);
    bool left = (1LL << (k - 1)) < n;
    bool right = n <= 2 * (n - k + 1);
    return left && right;
}

struct SeriesRow {
    long long n = 0;
    long long excess = 0;     // n - ceil_log2(n)
    long long threshold = 0;  // 2^(ceil_log2(n) - 1)
};

// The two quantities whose relative size decides det'(Q_n); excess >
// threshold exactly in the k+1 regime.
inline std::vector<SeriesRow> comparison_series(long long max_n) {
    if (max_n < 3) throw InvalidArgument("series needs max_n >= 3");
    std::vector<SeriesRow> rows;
    rows.reserve(static_cast<std::size_t>(max_n - 2));
    for (long long n = 3; n <= max_n; ++n) {
        long long k = ceil_log2(n);
        rows.push_back({n, n - k, 1LL << (k - 1)});
    }
    return rows;
}

inline std::string series_csv(const std::vector<SeriesRow>& rows) {
    std::string out = "n,excess,threshold\n";
    for (const SeriesRow& r : rows)
        out += std::to_string(r.n) + "," + std::to_string(r.excess) + "," +
               std::to_string(r.threshold) + "\n";
    return out;
}

// --- closed-form family predictions ------------------------------------------

enum class FamilyPredictKind {
    path,
    cycle,
    star,
    complete,
    complete_bipartite,
    hypercube,
    join_nk,  // N_{n+1} + K_{n+1}
    tree,
};

struct FamilySpec {
    FamilyPredictKind kind = FamilyPredictKind::path;
    long long n = 0;
    long long m = 0;                // second parameter for complete_bipartite
    std::optional<Graph> tree;      // explicit tree for FamilyPredictKind::tree

    FamilySpec() = default;
    FamilySpec(FamilyPredictKind kind_, long long n_, long long m_ = 0)
        : kind(kind_), n(n_), m(m_) {}
};

struct Prediction {
    std::optional<int> det;
    std::optional<int> det_prime;
    std::string det_source;
    std::string det_prime_source;
};

// Closed-form determining number and index where a formula applies; values
// outside a formula's hypothesis range stay unset, parameters outside every
// range throw.
inline Prediction predict(const FamilySpec& spec, const SearchOptions& opts = {}) {
    Prediction p;
    switch (spec.kind) {
        case FamilyPredictKind::path: {
            if (spec.n < 2) throw InvalidArgument("path prediction needs n >= 2");
            p.det = 1;
            p.det_source = "det(P_n) = 1";
            if (spec.n > 2) {
                p.det_prime = 1;
                p.det_prime_source = "det'(P_n) = 1 for n > 2";
            }
            return p;
        }
        case FamilyPredictKind::cycle: {
            if (spec.n < 3) throw InvalidArgument("cycle prediction needs n >= 3");
            p.det = 2;
            p.det_source = "det(C_n) = 2";
            p.det_prime = 2;
            p.det_prime_source = "det'(C_n) = 2";
            return p;
        }
        case FamilyPredictKind::star: {
            if (spec.n < 2) throw InvalidArgument("star prediction needs n >= 2");
            p.det = static_cast<int>(spec.n - 1);
            p.det_source = "det(K_{1,n}) = n-1";
            p.det_prime = static_cast<int>(spec.n - 1);
            p.det_prime_source = "det'(K_{1,n}) = n-1";
            return p;
        }
        case FamilyPredictKind::complete: {
            if (spec.n < 2) throw InvalidArgument("complete prediction needs n >= 2");
            p.det = static_cast<int>(spec.n - 1);
            p.det_source = "det(K_n) = n-1";
            if (spec.n > 2) {
                p.det_prime = static_cast<int>(2 * spec.n / 3);
                p.det_prime_source = "det'(K_n) = floor(2n/3)";
            }
            return p;
        }
        case FamilyPredictKind::complete_bipartite: {
            long long a = std::max(spec.n, spec.m);
            long long b = std::min(spec.n, spec.m);
            if (b < 2) throw InvalidArgument("complete bipartite prediction needs n >= m > 1");
            p.det = static_cast<int>(a + b - 2);
            p.det_source = "det(K_{n,m}) = n+m-2";
            p.det_prime = static_cast<int>(a == b ? a : a - 1);
            p.det_prime_source = a == b ? "det'(K_{n,n}) = n" : "det'(K_{n,m}) = n-1 for n > m";
            return p;
        }
        case FamilyPredictKind::hypercube: {
            if (spec.n < 1) throw InvalidArgument("hypercube prediction needs n >= 1");
            p.det = ceil_log2(spec.n) + 1;
            p.det_source = "det(Q_n) = ceil(log2 n) + 1";
            if (spec.n >= 3) {
                p.det_prime = qn_det_index(spec.n);
                p.det_prime_source = "det'(Q_n) by the ceil(log2 n) regime split";
            } else if (spec.n == 2) {
                p.det_prime = 2;
                p.det_prime_source = "det'(Q_2) = det'(C_4) = 2";
            }
            return p;
        }
        case FamilyPredictKind::join_nk: {
            if (spec.n < 1) throw InvalidArgument("join family prediction needs n >= 1");
            p.det = static_cast<int>(2 * spec.n);
            p.det_source = "det(N_{n+1} + K_{n+1}) = 2n";
            p.det_prime = static_cast<int>(spec.n);
            p.det_prime_source = "det'(N_{n+1} + K_{n+1}) = n";
            return p;
        }
        case FamilyPredictKind::tree: {
            if (!spec.tree) throw InvalidArgument("tree prediction needs an explicit tree");
            const Graph& t = *spec.tree;
            if (!is_tree(t) || t.vertex_count() < 3)
                throw InvalidArgument("tree prediction needs a tree on >= 3 vertices");
            auto det = determining_number(t, opts);
            if (det.status != SearchStatus::exact)
                throw BudgetExceeded("tree determining search exhausted");
            p.det = det.value;
            p.det_source = "det(T) by exact search";
            p.det_prime = det.value;
            p.det_prime_source = "det'(T) = det(T) for trees";
            return p;
        }
    }
    throw InvalidArgument("unknown family prediction kind");
}

// The graph a prediction speaks about, for cross-validation.
inline Graph realize_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyPredictKind::path: return path_graph(static_cast<int>(spec.n));
        case FamilyPredictKind::cycle: return cycle_graph(static_cast<int>(spec.n));
        case FamilyPredictKind::star: return star_graph(static_cast<int>(spec.n));
        case FamilyPredictKind::complete: return complete_graph(static_cast<int>(spec.n));
        case FamilyPredictKind::complete_bipartite:
            return complete_bipartite(static_cast<int>(std::max(spec.n, spec.m)),
                                      static_cast<int>(std::min(spec.n, spec.m)));
        case FamilyPredictKind::hypercube: return hypercube(static_cast<int>(spec.n));
        case FamilyPredictKind::join_nk:
            return join(empty_graph(static_cast<int>(spec.n + 1)),
                        complete_graph(static_cast<int>(spec.n + 1)));
        case FamilyPredictKind::tree:
            if (!spec.tree) throw InvalidArgument("tree spec without a tree");
            return *spec.tree;
    }
    throw InvalidArgument("unknown family prediction kind");
}

}  // namespace symbreak
