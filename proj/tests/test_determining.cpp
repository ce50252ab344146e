#include "doctest.h"

#include <random>
#include <set>

#include "symbreak/determining.hpp"
#include "symbreak/named_graphs.hpp"

#include "oracle_helpers.hpp"

using namespace symbreak;

namespace {

void check_det_against_oracle(const Graph& g) {
    auto auts = oracle::all_automorphisms(g);
    auto result = determining_number(g);
    REQUIRE(result.status == SearchStatus::exact);
    CHECK(result.value == oracle::determining_number(g, auts));
    CHECK(static_cast<int>(result.witness.size()) == result.value);
    CHECK(result.certified_minimal);
    CHECK(oracle::vertex_set_determining(auts, result.witness));
    CHECK(is_vertex_determining(g, result.witness));
}

void check_det_index_against_oracle(const Graph& g) {
    auto auts = oracle::all_automorphisms(g);
    auto result = determining_index(g);
    REQUIRE(result.status == SearchStatus::exact);
    CHECK(result.value == oracle::determining_index(g, auts));
    CHECK(static_cast<int>(result.witness.size()) == result.value);
    CHECK(oracle::edge_set_determining(auts, result.witness));
    CHECK(is_edge_determining(g, result.witness));
}

}  // namespace

TEST_CASE("vertex determining membership") {
    Graph env = named_graph(NamedGraphId::EnvelopeH);
    CHECK(is_vertex_determining(env, {2, 4}));
    CHECK(!is_vertex_determining(env, {2}));

    Graph c4 = cycle_graph(4);
    CHECK(!is_vertex_determining(c4, {0}));
    CHECK(is_vertex_determining(c4, {0, 1}));
    CHECK(is_vertex_determining(c4, {0, 1, 2, 3}));

    // The empty set determines exactly the asymmetric graphs.
    CHECK(is_vertex_determining(oracle::asymmetric_tree7(), {}));
    CHECK(!is_vertex_determining(path_graph(3), {}));
}

TEST_CASE("edge determining membership") {
    Graph p4 = path_graph(4);
    CHECK(is_edge_determining(p4, {Edge(2, 3)}));
    CHECK(!is_edge_determining(p4, {Edge(1, 2)}));

    Graph env = named_graph(NamedGraphId::EnvelopeH);
    CHECK(is_edge_determining(env, {Edge(2, 3), Edge(2, 4)}));
    CHECK(!is_edge_determining(env, {Edge(2, 3), Edge(4, 5)}));
    CHECK(!is_edge_determining(env, {Edge(2, 4)}));
}

TEST_CASE("determining index undefined cases") {
    CHECK_THROWS_AS(is_edge_determining(complete_graph(2), {}), UndefinedDeterminingIndex);
    CHECK_THROWS_AS(determining_index(disjoint_union({complete_graph(2), complete_graph(2)})),
                    UndefinedDeterminingIndex);
    CHECK_THROWS_AS(determining_index(empty_graph(2)), UndefinedDeterminingIndex);
    CHECK_THROWS_AS(
        compose_components_det_index(disjoint_union({path_graph(3), complete_graph(2)})),
        UndefinedDeterminingIndex);

    // One isolated vertex is fine.
    CHECK(determining_index(disjoint_union({complete_graph(5), complete_graph(1)})).value == 3);

    try {
        determining_index(disjoint_union({path_graph(3), complete_graph(2)}));
        CHECK(false);
    } catch (const UndefinedDeterminingIndex& e) {
        CHECK(std::string(e.what()).find("K_2 component") != std::string::npos);
    }
}

TEST_CASE("determining numbers of families") {
    for (int n = 2; n <= 7; ++n) CHECK(determining_number(complete_graph(n)).value == n - 1);
    for (int n = 3; n <= 7; ++n) CHECK(determining_number(cycle_graph(n)).value == 2);
    for (int n = 2; n <= 7; ++n) CHECK(determining_number(path_graph(n)).value == 1);
    for (int n = 2; n <= 5; ++n) CHECK(determining_number(star_graph(n)).value == n - 1);
    CHECK(determining_number(complete_bipartite(3, 2)).value == 3);
    CHECK(determining_number(complete_bipartite(3, 3)).value == 4);
    CHECK(determining_number(hypercube(3)).value == 3);
    CHECK(determining_number(hypercube(4)).value == 3);
    CHECK(determining_number(named_graph(NamedGraphId::G4)).value == 1);
    CHECK(determining_number(named_graph(NamedGraphId::EnvelopeH)).value == 2);
    CHECK(determining_number(named_graph(NamedGraphId::K4MinusE)).value == 2);
    CHECK(determining_number(oracle::asymmetric_tree7()).value == 0);
}

TEST_CASE("determining indices of fixtures") {
    CHECK(determining_index(named_graph(NamedGraphId::G1)).value == 1);
    CHECK(determining_index(named_graph(NamedGraphId::G2)).value == 1);
    CHECK(determining_index(named_graph(NamedGraphId::G3)).value == 2);
    CHECK(determining_index(named_graph(NamedGraphId::G4)).value == 2);
    CHECK(determining_index(named_graph(NamedGraphId::EnvelopeH)).value == 2);
    CHECK(determining_index(named_graph(NamedGraphId::K4MinusE)).value == 1);

    for (int n = 3; n <= 7; ++n) CHECK(determining_index(path_graph(n)).value == 1);
    for (int n = 3; n <= 7; ++n) CHECK(determining_index(cycle_graph(n)).value == 2);
    for (int n = 3; n <= 7; ++n) CHECK(determining_index(complete_graph(n)).value == 2 * n / 3);
    for (int n = 2; n <= 5; ++n) CHECK(determining_index(star_graph(n)).value == n - 1);
    CHECK(determining_index(hypercube(3)).value == 2);
}

TEST_CASE("searches agree with the exhaustive oracle on random graphs") {
    std::mt19937 rng(321);
    int index_cases = 0;
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = oracle::random_graph(rng, n, 0.25 + 0.25 * (trial % 3));
        check_det_against_oracle(g);
        if (det_index_definedness(g).defined) {
            check_det_index_against_oracle(g);
            ++index_cases;
        }
    }
    CHECK(index_cases > 10);
}

TEST_CASE("witnesses are deterministic and lexicographically least at their size") {
    Graph q3 = hypercube(3);
    auto a = determining_number(q3);
    auto b = determining_number(q3);
    CHECK(a.witness == b.witness);

    // First element restricted to orbit minima: Q_3 is vertex-transitive so
    // the witness starts at 0.
    REQUIRE(!a.witness.empty());
    CHECK(a.witness.front() == 0);

    // Edge ids 0 and 1 of C_5 are {0,1} and {0,4}; fixing the adjacent pair
    // pins 0, 1 and 4, which determines the cycle.
    auto ei = determining_index(cycle_graph(5));
    CHECK(ei.witness == std::vector<Edge>{Edge(0, 1), Edge(0, 4)});
}

TEST_CASE("monotonicity: supersets of determining sets are determining") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = oracle::random_connected_graph(rng, 6, 0.5);
        auto det = determining_number(g);
        auto extended = det.witness;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (std::find(extended.begin(), extended.end(), v) != extended.end()) continue;
            if (rng() % 2) extended.push_back(v);
        }
        std::sort(extended.begin(), extended.end());
        CHECK(is_vertex_determining(g, extended));

        if (g.edge_count() == 0) continue;
        auto idx = determining_index(g);
        auto extended_edges = idx.witness;
        for (const Edge& e : g.edges()) {
            if (std::find(extended_edges.begin(), extended_edges.end(), e) != extended_edges.end())
                continue;
            if (rng() % 2) extended_edges.push_back(e);
        }
        std::sort(extended_edges.begin(), extended_edges.end());
        CHECK(is_edge_determining(g, extended_edges));
    }
}

TEST_CASE("det of the complement equals det") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = oracle::random_graph(rng, 6, 0.5);
        CHECK(determining_number(g).value == determining_number(complement(g)).value);
    }
    CHECK(determining_number(star_graph(5)).value ==
          determining_number(complement(star_graph(5))).value);
}

TEST_CASE("det = 0 iff det' = 0 iff the group is trivial") {
    Graph a = oracle::asymmetric_tree7();
    CHECK(automorphisms(a).order == 1);
    CHECK(determining_number(a).value == 0);
    CHECK(determining_index(a).value == 0);

    Graph c5 = cycle_graph(5);
    CHECK(automorphisms(c5).order > 1);
    CHECK(determining_number(c5).value > 0);
    CHECK(determining_index(c5).value > 0);
}

TEST_CASE("edge set construction from a vertex determining set") {
    // Pairwise adjacent pair in C_5: path edge plus the smallest adjacent edge.
    Graph c5 = cycle_graph(5);
    auto t = edge_set_from_vertex_set(c5, {0, 1});
    CHECK(t == std::vector<Edge>{Edge(0, 1), Edge(0, 4)});
    CHECK(is_edge_determining(c5, t));

    // Pairwise adjacent triple in K_4: the two sorted path edges suffice.
    Graph k4 = complete_graph(4);
    auto tk = edge_set_from_vertex_set(k4, {0, 1, 2});
    CHECK(tk == std::vector<Edge>{Edge(0, 1), Edge(1, 2)});
    CHECK(is_edge_determining(k4, tk));

    // The envelope graph's minimum set {2,4} is adjacent: path edge plus the
    // smallest incident edge.
    Graph env = named_graph(NamedGraphId::EnvelopeH);
    auto tenv = edge_set_from_vertex_set(env, {2, 4});
    CHECK(tenv.size() == 2);
    CHECK(is_edge_determining(env, tenv));

    // Geodesic branch: {2,5} is a non-adjacent determining pair of the same
    // graph.
    auto te = edge_set_from_vertex_set(env, {2, 5});
    CHECK(te.size() == 2);
    CHECK(is_edge_determining(env, te));

    // Degenerate geodesic collision: P_3 with all vertices has only 2 edges.
    Graph p3 = path_graph(3);
    auto tp = edge_set_from_vertex_set(p3, {0, 1, 2});
    CHECK(tp == std::vector<Edge>{Edge(0, 1), Edge(1, 2)});

    // Two leaves of K_{1,3} share their geodesic midpoint (u1 = u2).
    Graph claw = star_graph(3);
    auto tc = edge_set_from_vertex_set(claw, {1, 2});
    CHECK(tc == std::vector<Edge>{Edge(0, 1), Edge(0, 2)});
    CHECK(is_edge_determining(claw, tc));

    CHECK_THROWS_AS(edge_set_from_vertex_set(c5, {0}), InvalidArgument);
    // Antipodal pair of C_4: the axis reflection fixes both, so not determining.
    CHECK_THROWS_AS(edge_set_from_vertex_set(cycle_graph(4), {0, 2}), InvalidArgument);
    CHECK_THROWS_AS(edge_set_from_vertex_set(disjoint_union({c5, c5}), {0, 1}), InvalidArgument);
}

TEST_CASE("edge set construction, randomized") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = oracle::random_connected_graph(rng, 5 + static_cast<int>(rng() % 3), 0.45);
        auto det = determining_number(g);
        if (det.value < 2) continue;
        auto t = edge_set_from_vertex_set(g, det.witness);
        CHECK(is_edge_determining(g, t));
        CHECK(t.size() <= det.witness.size());
        CHECK(t.size() + 1 >= det.witness.size());
    }
}

TEST_CASE("endvertex sets") {
    Graph p4 = path_graph(4);
    auto s = endvertex_set(p4, {Edge(2, 3)});
    CHECK(s == std::vector<int>{2, 3});
    CHECK(is_vertex_determining(p4, s));

    Graph diamond = named_graph(NamedGraphId::K4MinusE);
    CHECK(endvertex_set(diamond, {Edge(0, 1)}) == std::vector<int>{0, 1});

    CHECK_THROWS_AS(endvertex_set(p4, {Edge(1, 2)}), InvalidArgument);

    std::mt19937 rng(555);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = oracle::random_connected_graph(rng, 6, 0.5);
        auto idx = determining_index(g);
        auto endpoints = endvertex_set(g, idx.witness);
        CHECK(is_vertex_determining(g, endpoints));
        CHECK(endpoints.size() <= 2 * idx.witness.size());
    }
}

TEST_CASE("composition over components") {
    // Two isomorphic asymmetric components: one edge pins the pair.
    Graph twins = disjoint_union({oracle::asymmetric_tree7(), oracle::asymmetric_tree7()});
    CHECK(compose_components_det_index(twins) == 1);
    CHECK(compose_components_det(twins) == 1);

    Graph two_c4 = disjoint_union({cycle_graph(4), cycle_graph(4)});
    CHECK(compose_components_det_index(two_c4) == 4);
    CHECK(compose_components_det(two_c4) == 4);

    Graph k5_k1 = disjoint_union({complete_graph(5), complete_graph(1)});
    CHECK(compose_components_det_index(k5_k1) == 3);
    CHECK(compose_components_det(k5_k1) == 4);

    // Three isomorphic asymmetric components: fix one edge in all but one.
    Graph triples = disjoint_union(
        {oracle::asymmetric_tree7(), oracle::asymmetric_tree7(), oracle::asymmetric_tree7()});
    CHECK(compose_components_det_index(triples) == 2);
    CHECK(compose_components_det(triples) == 2);
    CHECK(determining_index(triples).value == 2);

    // Composition agrees with the whole-graph search.
    std::mt19937 rng(9000);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Graph> parts;
        int k = 2 + static_cast<int>(rng() % 2);
        for (int i = 0; i < k; ++i)
            parts.push_back(oracle::random_connected_graph(rng, 3 + static_cast<int>(rng() % 3), 0.6));
        Graph g = disjoint_union(parts);
        CHECK(compose_components_det(g) == determining_number(g).value);
        if (det_index_definedness(g).defined)
            CHECK(compose_components_det_index(g) == determining_index(g).value);
    }
}

TEST_CASE("bound report") {
    auto star = check_bounds(star_graph(5));
    CHECK(star.det == 4);
    CHECK(star.det_prime == 4);
    CHECK(star.ok);

    auto diamond = check_bounds(named_graph(NamedGraphId::K4MinusE));
    CHECK(diamond.det == 2);
    CHECK(diamond.det_prime == 1);
    CHECK(diamond.det == 2 * diamond.det_prime);
    CHECK(diamond.ok);

    auto g4 = check_bounds(named_graph(NamedGraphId::G4));
    CHECK(g4.det == 1);
    CHECK(g4.det_is_one);
    CHECK(g4.edge_flip_invariant);
    CHECK(g4.det_prime == 2);
    CHECK(g4.ok);

    CHECK_THROWS_AS(check_bounds(disjoint_union({cycle_graph(3), cycle_graph(3)})),
                    InvalidArgument);
}

TEST_CASE("line graph transfer") {
    auto g1 = line_graph_transfer_check(named_graph(NamedGraphId::G1));
    CHECK(g1.det_prime == 1);
    CHECK(g1.det_line == 2);
    CHECK(g1.exceptional);
    CHECK(!g1.equal);

    auto g2 = line_graph_transfer_check(named_graph(NamedGraphId::G2));
    CHECK(g2.det_prime == 1);
    CHECK(g2.det_line == 2);
    CHECK(g2.exceptional);

    auto g3 = line_graph_transfer_check(named_graph(NamedGraphId::G3));
    CHECK(g3.det_prime == 2);
    CHECK(g3.det_line == 3);
    CHECK(g3.exceptional);

    auto c5 = line_graph_transfer_check(cycle_graph(5));
    CHECK(c5.det_prime == 2);
    CHECK(c5.det_line == 2);
    CHECK(!c5.exceptional);
    CHECK(c5.equal);

    auto env = line_graph_transfer_check(named_graph(NamedGraphId::EnvelopeH));
    CHECK(env.equal);

    auto p5 = line_graph_transfer_check(path_graph(5));
    CHECK(p5.equal);

    // Randomized sweep: connected graphs away from the three exceptions
    // transfer exactly.
    std::mt19937 rng(606);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = oracle::random_connected_graph(rng, 4 + static_cast<int>(rng() % 4), 0.45);
        auto r = line_graph_transfer_check(g);
        CHECK(r.equal == !r.exceptional);
    }
}

TEST_CASE("tree determining equality") {
    auto star = tree_det_check(star_graph(4));
    CHECK(star.det == 3);
    CHECK(star.det_prime == 3);

    auto p6 = tree_det_check(path_graph(6));
    CHECK(p6.det == 1);
    CHECK(p6.det_prime == 1);

    std::mt19937 rng(424242);
    for (int trial = 0; trial < 12; ++trial) {
        Graph t = oracle::random_tree(rng, 10);
        auto r = tree_det_check(t);
        CHECK(r.det == r.det_prime);
        CHECK(is_vertex_determining(t, r.distant_endvertices));
    }

    CHECK_THROWS_AS(tree_det_check(cycle_graph(5)), InvalidArgument);
}

TEST_CASE("hypercube searches match the closed forms") {
    CHECK(determining_index(hypercube(5)).value == 3);
    CHECK(determining_index(hypercube(6)).value == 3);
    CHECK(determining_number(hypercube(5)).value == 4);
    CHECK(determining_number(hypercube(6)).value == 4);
}

TEST_CASE("searches stay correct when element enumeration is disabled") {
    SearchOptions opts;
    opts.group_enumeration_limit = 1;  // force the constrained-search path
    CHECK(determining_number(complete_graph(5), opts).value == 4);
    CHECK(determining_index(complete_graph(5), opts).value == 3);
    CHECK(determining_number(cycle_graph(6), opts).value == 2);
    CHECK(determining_index(cycle_graph(6), opts).value == 2);
    CHECK(determining_number(empty_graph(5), opts).value == 4);
}

TEST_CASE("determining numbers of edgeless and tiny graphs") {
    CHECK(determining_number(empty_graph(5)).value == 4);
    CHECK(determining_number(Graph(0)).value == 0);
    CHECK(determining_number(Graph(1)).value == 0);
    CHECK(determining_index(Graph(1)).value == 0);
    CHECK(compose_components_det(cycle_graph(5)) == 2);  // single component
}

TEST_CASE("budget exhaustion reports unknown") {
    SearchOptions tiny;
    tiny.budget_limit = 3;
    auto det = determining_number(complete_graph(6), tiny);
    CHECK(det.status == SearchStatus::unknown);
    CHECK(det.value == -1);
    auto idx = determining_index(complete_graph(6), tiny);
    CHECK(idx.status == SearchStatus::unknown);
}

TEST_CASE("checker lines up with per-set searches") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = oracle::random_graph(rng, 6, 0.5);
        DeterminingChecker checker(g);
        for (int inner = 0; inner < 20; ++inner) {
            std::vector<int> s;
            for (int v = 0; v < 6; ++v)
                if (rng() % 2) s.push_back(v);
            CHECK(checker.vertex_set_determining(s) == is_vertex_determining(g, s));
        }
        if (det_index_definedness(g).defined && g.edge_count() > 0) {
            for (int inner = 0; inner < 10; ++inner) {
                std::vector<Edge> t;
                for (const Edge& e : g.edges())
                    if (rng() % 2) t.push_back(e);
                CHECK(checker.edge_set_determining(t) == is_edge_determining(g, t));
            }
        }
    }
}
