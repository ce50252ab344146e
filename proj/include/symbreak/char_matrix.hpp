#pragma once

#include <string>
#include <vector>

#include "symbreak/determining.hpp"
#include "symbreak/errors.hpp"
#include "symbreak/formulas.hpp"
#include "symbreak/graph.hpp"

namespace symbreak {

// 0-1 matrix whose row i is the bit string of the i-th vertex in an ordered
// hypercube vertex tuple; column j is coordinate j, i.e. bit j of the id.
class CharacteristicMatrix {
public:
    CharacteristicMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), bits_(static_cast<std::size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw InvalidArgument("negative matrix dimensions");
    }

    static CharacteristicMatrix of_vertices(const std::vector<int>& ordered_vertices,
                                            int dimension) {
        if (dimension < 1 || dimension > 30)
            throw InvalidArgument("hypercube dimension out of range");
        CharacteristicMatrix m(static_cast<int>(ordered_vertices.size()), dimension);
        for (std::size_t i = 0; i < ordered_vertices.size(); ++i) {
            long long id = ordered_vertices[i];
            if (id < 0 || id >= (1LL << dimension))
                throw InvalidArgument("vertex id out of range for the hypercube");
            for (int j = 0; j < dimension; ++j)
                m.set(static_cast<int>(i), j, static_cast<int>((id >> j) & 1));
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int at(int r, int c) const { return bits_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, int value) {
        bits_[static_cast<std::size_t>(r) * cols_ + c] = static_cast<char>(value ? 1 : 0);
    }

    std::vector<int> column(int c) const {
        std::vector<int> out(static_cast<std::size_t>(rows_));
        for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
        return out;
    }

    std::string row_string(int r) const {
        std::string out(static_cast<std::size_t>(cols_), '0');
        for (int c = 0; c < cols_; ++c)
            if (at(r, c)) out[c] = '1';
        return out;
    }

    // Vertex id of row r under the bit-j-is-coordinate-j labeling.
    int row_vertex(int r) const {
        int id = 0;
        for (int c = 0; c < cols_; ++c)
            if (at(r, c)) id |= 1 << c;
        return id;
    }

    friend bool operator==(const CharacteristicMatrix& a, const CharacteristicMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
    }

private:
    int rows_;
    int cols_;
    std::vector<char> bits_;
};

// Isomorphic 0-1 columns: all identical bits or all opposite bits.
inline bool columns_isomorphic(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw InvalidArgument("column length mismatch");
    bool identical = true;
    bool opposite = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) identical = false;
        if (a[i] == b[i]) opposite = false;
    }
    return identical || opposite;
}

inline bool has_isomorphic_column_pair(const CharacteristicMatrix& m) {
    for (int c1 = 0; c1 < m.cols(); ++c1)
        for (int c2 = c1 + 1; c2 < m.cols(); ++c2)
            if (columns_isomorphic(m.column(c1), m.column(c2))) return true;
    return false;
}

// Determining-set criterion for hypercubes: a nonempty ordered vertex set of
// Q_n is determining iff no two columns of its characteristic matrix are
// isomorphic. (A 0-1 column always contains a determining set of the K_2
// factor, so only the column condition is substantive.)
inline bool is_determining_by_matrix(const std::vector<int>& ordered_vertices, int dimension) {
    if (ordered_vertices.empty()) throw InvalidArgument("empty vertex set");
    return !has_isomorphic_column_pair(
        CharacteristicMatrix::of_vertices(ordered_vertices, dimension));
}

// Constructive minimum edge determining set of Q_n.
//
// Y is an r x n matrix (r = det'(Q_n)) whose leftmost r columns are the
// standard basis vectors and whose remaining columns are the
// lexicographically smallest pairwise non-isomorphic 0-1 columns. X
// duplicates each row of Y with its basis 1 switched off, so rows 2i and
// 2i+1 differ exactly in column i and form an edge of Q_n.
struct QnEdgeConstruction {
    int n = 0;
    CharacteristicMatrix y{0, 0};
    CharacteristicMatrix x{0, 0};
    std::vector<Edge> edges;
};

inline QnEdgeConstruction construct_qn_edge_set(int n, const SearchOptions& opts = {}) {
    if (n < 3) throw InvalidArgument("edge construction needs hypercube dimension >= 3");
    int r = qn_det_index(n);
    if (n - r > (1 << (r - 1)))
        throw InvariantViolation("not enough non-isomorphic columns at the chosen size");

    QnEdgeConstruction out;
    out.n = n;
    out.y = CharacteristicMatrix(r, n);
    for (int i = 0; i < r; ++i) out.y.set(i, i, 1);

    // Free columns: smallest r-bit values, read with row 0 as the most
    // significant bit. Values below 2^(r-1) have distinct non-complementary
    // patterns, so greedy lexicographic choice never collides.
    std::vector<unsigned> chosen;
    for (unsigned value = 0; static_cast<int>(chosen.size()) < n - r; ++value) {
        bool clash = false;
        unsigned mask = (1u << r) - 1;
        for (unsigned prior : chosen)
            if (prior == value || prior == (~value & mask)) clash = true;
        if (clash) continue;
        chosen.push_back(value);
        int col = r + static_cast<int>(chosen.size()) - 1;
        for (int i = 0; i < r; ++i)
            out.y.set(i, col, static_cast<int>((value >> (r - 1 - i)) & 1));
    }

    out.x = CharacteristicMatrix(2 * r, n);
    for (int i = 0; i < r; ++i) {
        for (int c = 0; c < n; ++c) {
            out.x.set(2 * i, c, out.y.at(i, c));
            out.x.set(2 * i + 1, c, c == i ? 0 : out.y.at(i, c));
        }
        out.edges.emplace_back(out.x.row_vertex(2 * i), out.x.row_vertex(2 * i + 1));
    }
    std::sort(out.edges.begin(), out.edges.end());

    // Shape checks that the determining argument rests on.
    for (int c = r; c < n; ++c) {
        int ones = 0;
        for (int row = 0; row < 2 * r; ++row) ones += out.x.at(row, c);
        if (ones % 2 != 0)
            throw InvariantViolation("duplicated free column has odd weight");
    }
    if (has_isomorphic_column_pair(out.x))
        throw InvariantViolation("constructed endvertex matrix has isomorphic columns");

    if (n <= 6) {
        // Small enough for a direct stabilizer check on the hypercube itself.
        SearchBudget budget;
        budget.limit = opts.budget_limit;
        if (!is_edge_determining(hypercube(n), out.edges, &budget))
            throw InvariantViolation("constructed edge set fails the stabilizer check");
    }
    // For larger n the column check above certifies the endvertex set, and
    // fixing the edges forces every endvertex because any flip changes a
    // pairwise distance between the duplicated rows.
    return out;
}

// Reproduces the Q_4 gap: a minimum edge determining set whose endvertex set
// is determining but strictly larger than det(Q_4), with every 3-subset of
// the endvertices refuted by the column criterion.
struct Q4EndvertexReport {
    std::vector<Edge> edge_set;
    bool edge_set_determining = false;
    int det_index = -1;
    bool edge_set_minimum = false;
    std::vector<int> endvertices;
    bool endvertices_determining = false;
    int det_number = -1;
    bool endvertex_set_not_minimum = false;
    bool every_three_subset_fails = false;

    bool all_passed() const {
        return edge_set_determining && edge_set_minimum && endvertices_determining &&
               endvertex_set_not_minimum && every_three_subset_fails;
    }
};

inline Q4EndvertexReport q4_endvertex_check(const SearchOptions& opts = {}) {
    Graph q4 = hypercube(4);
    Q4EndvertexReport r;
    // Tuples (1,0,0,0),(0,0,0,0) and (0,1,1,0),(0,0,1,0) with coordinate j as
    // bit j: vertices 1, 0, 6, 4.
    r.edge_set = {Edge(0, 1), Edge(4, 6)};
    r.edge_set_determining = is_edge_determining(q4, r.edge_set);

    auto idx = determining_index(q4, opts);
    r.det_index = idx.value;
    r.edge_set_minimum = idx.status == SearchStatus::exact && idx.value == 2;

    r.endvertices = {0, 1, 4, 6};
    r.endvertices_determining = is_vertex_determining(q4, r.endvertices) &&
                                is_determining_by_matrix(r.endvertices, 4);

    auto det = determining_number(q4, opts);
    r.det_number = det.value;
    r.endvertex_set_not_minimum = det.status == SearchStatus::exact &&
                                  static_cast<int>(r.endvertices.size()) > det.value;

    r.every_three_subset_fails = true;
    for (std::size_t skip = 0; skip < r.endvertices.size(); ++skip) {
        std::vector<int> subset;
        for (std::size_t i = 0; i < r.endvertices.size(); ++i)
            if (i != skip) subset.push_back(r.endvertices[i]);
        if (is_determining_by_matrix(subset, 4)) r.every_three_subset_fails = false;
        if (is_vertex_determining(q4, subset)) r.every_three_subset_fails = false;
    }
    return r;
}

}  // namespace symbreak
