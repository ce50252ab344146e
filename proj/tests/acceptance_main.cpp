// Acceptance suite: reproduces every headline value exactly and prints one
// pass/fail line per criterion. Exit code 0 only when all criteria hold.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "symbreak/symbreak.hpp"

#include "oracle_helpers.hpp"

using namespace symbreak;

namespace {

struct Criterion {
    int number;
    std::string title;
    bool passed;
    std::string detail;
};

std::vector<Criterion> results;

void record(int number, const std::string& title, bool passed, const std::string& detail) {
    results.push_back({number, title, passed, detail});
    std::printf("criterion %d: %s  %s (%s)\n", number, passed ? "PASS" : "FAIL", title.c_str(),
                detail.c_str());
    std::fflush(stdout);
}

// The named corpus used by criteria 4 and 7: connected graphs with their
// constructions spelled out.
std::vector<Graph> connected_corpus() {
    std::vector<Graph> corpus;
    for (int n = 3; n <= 8; ++n) corpus.push_back(path_graph(n));
    for (int n = 3; n <= 8; ++n) corpus.push_back(cycle_graph(n));
    for (int n = 3; n <= 8; ++n) corpus.push_back(complete_graph(n));
    for (int n = 2; n <= 6; ++n) corpus.push_back(star_graph(n));
    for (int n = 2; n <= 5; ++n)
        for (int m = 2; m <= n; ++m) corpus.push_back(complete_bipartite(n, m));
    for (int n = 1; n <= 3; ++n)
        corpus.push_back(join(empty_graph(n + 1), complete_graph(n + 1))
                             .with_name("N" + std::to_string(n + 1) + "+K" + std::to_string(n + 1)));
    for (int n = 2; n <= 4; ++n) corpus.push_back(hypercube(n));
    corpus.push_back(named_graph(NamedGraphId::G1));
    corpus.push_back(named_graph(NamedGraphId::G2));
    corpus.push_back(named_graph(NamedGraphId::G3));
    corpus.push_back(named_graph(NamedGraphId::G4));
    corpus.push_back(named_graph(NamedGraphId::EnvelopeH));
    corpus.push_back(named_graph(NamedGraphId::K4MinusE));
    corpus.push_back(oracle::asymmetric_tree7().with_name("spider123"));

    std::mt19937 rng(20240809);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        Graph g = oracle::random_connected_graph(rng, n, 0.3 + 0.2 * (trial % 3));
        corpus.push_back(g.with_name("random" + std::to_string(trial)));
    }
    return corpus;
}

// --- criterion 1: closed-form family values vs exhaustive search ---------------

void criterion1() {
    int cases = 0;
    std::ostringstream fail;

    auto check_family = [&](const FamilySpec& spec, const std::string& label) {
        Prediction p = predict(spec);
        Graph g = realize_family(spec);
        auto det = determining_number(g);
        bool ok = det.status == SearchStatus::exact && p.det && det.value == *p.det;
        if (ok && p.det_prime) {
            auto idx = determining_index(g);
            ok = idx.status == SearchStatus::exact && idx.value == *p.det_prime;
        }
        ++cases;
        if (!ok) fail << " " << label;
    };

    for (int n = 3; n <= 8; ++n) check_family({FamilyPredictKind::path, n}, "P" + std::to_string(n));
    for (int n = 3; n <= 8; ++n) check_family({FamilyPredictKind::cycle, n}, "C" + std::to_string(n));

    const int kn_expected[] = {2, 2, 3, 4, 4, 5};
    for (int n = 3; n <= 8; ++n) {
        check_family({FamilyPredictKind::complete, n}, "K" + std::to_string(n));
        auto idx = determining_index(complete_graph(n));
        ++cases;
        if (idx.value != kn_expected[n - 3]) fail << " K" << n << "-index";
    }

    for (int n = 2; n <= 6; ++n) check_family({FamilyPredictKind::star, n}, "K1," + std::to_string(n));
    for (int n = 2; n <= 5; ++n)
        for (int m = 2; m <= n; ++m)
            check_family({FamilyPredictKind::complete_bipartite, n, m},
                         "K" + std::to_string(n) + "," + std::to_string(m));

    // Spot values named in the acceptance list.
    ++cases;
    if (determining_index(complete_bipartite(3, 3)).value != 3) fail << " K3,3-index";
    ++cases;
    if (determining_index(complete_bipartite(4, 2)).value != 3) fail << " K4,2-index";

    for (int n = 1; n <= 3; ++n) {
        FamilySpec spec{FamilyPredictKind::join_nk, n};
        Graph g = realize_family(spec);
        auto det = determining_number(g);
        auto idx = determining_index(g);
        ++cases;
        if (det.value != 2 * n || idx.value != n) fail << " join" << n;
    }

    record(1, "family formulas match exhaustive search", fail.str().empty(),
           std::to_string(cases) + " cases" + fail.str());
}

// --- criterion 2: hypercubes -----------------------------------------------------

void criterion2() {
    std::ostringstream fail;

    if (determining_number(hypercube(3)).value != 3) fail << " det(Q3)";
    if (determining_number(hypercube(4)).value != 3) fail << " det(Q4)";
    if (determining_index(hypercube(3)).value != 2) fail << " det'(Q3)";
    if (determining_index(hypercube(4)).value != 2) fail << " det'(Q4)";

    // det'(Q_5) = 3: every one of the C(80,2) = 3160 two-edge subsets fails,
    // and the constructed three-edge set verifies.
    Graph q5 = hypercube(5);
    DeterminingChecker checker(q5);
    const auto& edges = q5.edges();
    long long pairs = 0;
    long long refuted = 0;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            ++pairs;
            if (!checker.edge_set_determining({edges[i], edges[j]})) ++refuted;
        }
    if (pairs != 3160 || refuted != 3160) fail << " Q5-pair-refutation(" << refuted << "/" << pairs << ")";
    for (const Edge& e : edges)
        if (checker.edge_set_determining({e})) fail << " Q5-single-edge";

    // Spot-check the bulk refutation against the independent constrained
    // search on a sample of the pairs.
    std::mt19937 pair_rng(112358);
    for (int probe = 0; probe < 100; ++probe) {
        int i = static_cast<int>(pair_rng() % edges.size());
        int j = static_cast<int>(pair_rng() % edges.size());
        if (i == j) continue;
        if (is_edge_determining(q5, {edges[i], edges[j]})) fail << " Q5-probe@" << probe;
    }
    if (determining_index(q5).value != 3) fail << " det'(Q5)-search";

    auto c5 = construct_qn_edge_set(5);
    if (c5.edges.size() != 3 || !checker.edge_set_determining(c5.edges)) fail << " Q5-witness";

    // Constructions at every dimension: stabilizer-checked through n = 6
    // (construct_qn_edge_set runs that check internally), column-criterion
    // checked beyond.
    for (int n = 3; n <= 10; ++n) {
        auto c = construct_qn_edge_set(n);
        if (static_cast<int>(c.edges.size()) != qn_det_index(n)) {
            fail << " construct(" << n << ")-size";
            continue;
        }
        std::vector<int> endvertices;
        for (int row = 0; row < c.x.rows(); ++row) endvertices.push_back(c.x.row_vertex(row));
        if (!is_determining_by_matrix(endvertices, n)) fail << " construct(" << n << ")-columns";
        if (n <= 6) {
            SearchBudget budget;
            if (!is_edge_determining(hypercube(n), c.edges, &budget))
                fail << " construct(" << n << ")-stabilizer";
        }
    }

    record(2, "hypercube determining indices and constructions", fail.str().empty(),
           fail.str().empty() ? "Q3..Q4 exact, 3160 pairs refuted, constructions 3..10"
                              : fail.str());
}

// --- criterion 3: fixture graphs ---------------------------------------------------

void criterion3() {
    std::ostringstream fail;
    auto check = [&](const char* label, bool ok) {
        if (!ok) fail << " " << label;
    };

    check("det'(G1)", determining_index(named_graph(NamedGraphId::G1)).value == 1);
    check("det(L(G1))", determining_number(line_graph(named_graph(NamedGraphId::G1))).value == 2);
    check("det'(G2)", determining_index(named_graph(NamedGraphId::G2)).value == 1);
    check("det(L(G2))", determining_number(line_graph(named_graph(NamedGraphId::G2))).value == 2);
    check("det'(G3)", determining_index(named_graph(NamedGraphId::G3)).value == 2);
    check("det(L(G3))", determining_number(line_graph(named_graph(NamedGraphId::G3))).value == 3);

    Graph diamond = named_graph(NamedGraphId::K4MinusE);
    check("det(K4-e)", determining_number(diamond).value == 2);
    check("det'(K4-e)", determining_index(diamond).value == 1);

    Graph env = named_graph(NamedGraphId::EnvelopeH);
    check("det(H)", determining_number(env).value == 2);
    check("det'(H)", determining_index(env).value == 2);

    Graph g4 = named_graph(NamedGraphId::G4);
    check("det(G4)", determining_number(g4).value == 1);
    check("det'(G4)", determining_index(g4).value == 2);
    check("efi(G4)", is_edge_flip_invariant(g4));
    Permutation alpha = Permutation::from_cycles(
        18, {{0, 15}, {7, 17}, {16, 8}, {9, 6}, {1, 14}, {10, 5}, {2, 13}, {11, 4}, {3, 12}});
    Permutation beta = Permutation::from_cycles(
        18, {{0, 17}, {9, 8}, {16, 1}, {7, 10}, {15, 2}, {11, 6}, {14, 3}, {12, 5}, {13, 4}});
    Permutation gamma = Permutation::from_cycles(
        18, {{0, 9}, {1, 17}, {8, 10}, {16, 2}, {7, 11}, {15, 3}, {6, 12}, {14, 4}, {5, 13}});
    check("alpha", is_automorphism(g4, alpha));
    check("beta", is_automorphism(g4, beta));
    check("gamma", is_automorphism(g4, gamma));

    record(3, "fixture graph values", fail.str().empty(),
           fail.str().empty() ? "G1 G2 G3 K4-e H G4 all exact" : fail.str());
}

// --- criterion 4: bound suite --------------------------------------------------------

void criterion4() {
    std::ostringstream fail;
    int checked = 0;
    for (const Graph& g : connected_corpus()) {
        if (g.vertex_count() < 3) continue;
        auto det = determining_number(g);
        auto idx = determining_index(g);
        if (det.status != SearchStatus::exact || idx.status != SearchStatus::exact) {
            fail << " budget:" << g.name();
            continue;
        }
        ++checked;
        if (det.value == 1) {
            bool efi = is_edge_flip_invariant(g);
            if (idx.value != (efi ? 2 : 1)) fail << " dichotomy:" << g.name();
        } else {
            if (!(idx.value <= det.value && det.value <= 2 * idx.value))
                fail << " bounds:" << g.name();
        }
    }
    record(4, "determining bounds across the corpus", fail.str().empty(),
           std::to_string(checked) + " connected graphs, zero violations" + fail.str());
}

// --- criterion 5: oracle equivalence ---------------------------------------------------

void criterion5() {
    std::ostringstream fail;

    std::mt19937 rng(55555);
    int graphs = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        double p = 0.15 + 0.175 * (trial % 5);
        Graph g = oracle::random_graph(rng, n, p);
        ++graphs;

        auto brute = oracle::all_automorphisms(g);
        GeneratorSet gens = automorphisms(g);
        if (gens.order != brute.size()) {
            fail << " order@" << trial;
            continue;
        }
        std::set<Permutation> closed;
        closed.insert(Permutation::identity(n));
        std::vector<Permutation> frontier(closed.begin(), closed.end());
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const Permutation& q : frontier)
                for (const Permutation& h : gens.generators) {
                    Permutation r = compose(h, q);
                    if (closed.insert(r).second) next.push_back(r);
                }
            frontier = std::move(next);
        }
        std::set<Permutation> brute_set(brute.begin(), brute.end());
        if (closed != brute_set) fail << " group@" << trial;
    }

    int matrix_checks = 0;
    for (int dimension = 3; dimension <= 4; ++dimension) {
        Graph qn = hypercube(dimension);
        DeterminingChecker checker(qn);
        for (int trial = 0; trial < 250; ++trial) {
            int size = 1 + static_cast<int>(rng() % 6);
            std::set<int> pick;
            while (static_cast<int>(pick.size()) < size)
                pick.insert(static_cast<int>(rng() % qn.vertex_count()));
            std::vector<int> s(pick.begin(), pick.end());
            ++matrix_checks;
            if (is_determining_by_matrix(s, dimension) != checker.vertex_set_determining(s))
                fail << " matrix@" << dimension << "/" << trial;
        }
    }

    record(5, "engine vs brute force, matrix criterion vs stabilizer", fail.str().empty(),
           std::to_string(graphs) + " random groups, " + std::to_string(matrix_checks) +
               " hypercube sets" + fail.str());
}

// --- criterion 6: composition over components --------------------------------------------

void criterion6() {
    std::ostringstream fail;

    Graph k5k1 = disjoint_union({complete_graph(5), complete_graph(1)});
    if (compose_components_det_index(k5k1) != 3) fail << " K5+K1";
    Graph twins = disjoint_union({oracle::asymmetric_tree7(), oracle::asymmetric_tree7()});
    if (compose_components_det_index(twins) != 1) fail << " asymmetric-twins";

    std::mt19937 rng(606060);
    int cases = 0;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Graph> parts;
        int remaining = 12;
        int blocks = 2 + static_cast<int>(rng() % 2);
        for (int b = 0; b < blocks && remaining >= 3; ++b) {
            int size = 3 + static_cast<int>(rng() % std::min(4, remaining - 2));
            remaining -= size;
            if (rng() % 3 == 0)
                parts.push_back(cycle_graph(std::max(3, size)));
            else
                parts.push_back(oracle::random_connected_graph(rng, size, 0.5));
        }
        if (parts.size() < 2) continue;
        Graph g = disjoint_union(parts);
        ++cases;
        if (compose_components_det(g) != determining_number(g).value) fail << " det@" << trial;
        if (det_index_definedness(g).defined &&
            compose_components_det_index(g) != determining_index(g).value)
            fail << " det'@" << trial;
    }

    record(6, "component composition equals whole-graph search", fail.str().empty(),
           std::to_string(cases) + " random disconnected graphs + 2 fixed cases" + fail.str());
}

// --- criterion 7: distinguishing inequalities and the line-graph transfer -------------------

void criterion7() {
    std::ostringstream fail;
    Graph g2 = named_graph(NamedGraphId::G2);
    int checked = 0;
    for (const Graph& g : connected_corpus()) {
        if (g.vertex_count() > 8 || g.edge_count() > 12) continue;
        ++checked;

        auto dist = distinguishing_number(g);
        auto det = determining_number(g);
        if (dist.status != SearchStatus::exact || det.status != SearchStatus::exact) {
            fail << " budget:" << g.name();
            continue;
        }
        if (dist.value > det.value + 1) fail << " dist:" << g.name();

        if (g.vertex_count() < 3) continue;
        auto dist_idx = distinguishing_index(g);
        auto det_idx = determining_index(g);
        if (dist_idx.status != SearchStatus::exact || det_idx.status != SearchStatus::exact) {
            fail << " budget':" << g.name();
            continue;
        }
        if (dist_idx.value > det_idx.value + 1) fail << " dist':" << g.name();

        if (is_isomorphic(g, g2)) continue;
        auto line_dist = distinguishing_number(line_graph(g));
        if (line_dist.status != SearchStatus::exact) {
            fail << " budgetL:" << g.name();
            continue;
        }
        if (dist_idx.value != line_dist.value) fail << " transfer:" << g.name();
    }
    record(7, "distinguishing inequalities and line-graph transfer", fail.str().empty(),
           std::to_string(checked) + " corpus graphs, zero violations" + fail.str());
}

// --- criterion 8: the gap inequality and the comparison series -------------------------------

void criterion8() {
    std::ostringstream fail;
    auto start = std::chrono::steady_clock::now();
    for (long long n = 3; n <= (1LL << 20); ++n)
        if (!log2_gap_inequality_holds(n)) {
            fail << " inequality@" << n;
            break;
        }
    auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed >= 1000) fail << " too-slow(" << elapsed << "ms)";

    // qn_det_index asserts its two forms against each other on every call;
    // sweeping it across the same range discharges the form equivalence.
    for (long long n = 3; n <= (1LL << 20); ++n) qn_det_index(n);

    for (const SeriesRow& row : comparison_series(1024)) {
        long long k = ceil_log2(row.n);
        int expected = row.excess > row.threshold ? static_cast<int>(k + 1) : static_cast<int>(k);
        if (qn_det_index(row.n) != expected) fail << " regime@" << row.n;
    }

    record(8, "gap inequality to 2^20 and series regime switches", fail.str().empty(),
           "inequality " + std::to_string(elapsed) + "ms, series to 1024" + fail.str());
}

// --- criterion 9: the Q_4 endvertex reproduction ----------------------------------------------

void criterion9() {
    auto r = q4_endvertex_check();
    std::ostringstream detail;
    detail << "edge_set_determining=" << r.edge_set_determining
           << " det'(Q4)=" << r.det_index << " endvertices_determining=" << r.endvertices_determining
           << " det(Q4)=" << r.det_number << " three_subsets_fail=" << r.every_three_subset_fails;
    record(9, "Q_4 minimum edge set endvertex gap", r.all_passed(), detail.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();

    int failed = 0;
    for (const Criterion& c : results)
        if (!c.passed) ++failed;
    std::printf("%d/%d criteria passed\n", static_cast<int>(results.size()) - failed,
                static_cast<int>(results.size()));
    return failed == 0 ? 0 : 1;
}
