#include "doctest.h"

#include "symbreak/manifest.hpp"

using namespace symbreak;

TEST_CASE("manifest parsing") {
    const char* text = R"(# corpus
[[graph]]
name = "K4"            # inline comment
family = "complete"
params = [4]
det = 3
det_prime = 2
aut_order = 24

[[graph]]
name = "G4"
named = "G4"
efi = true
det = 1
)";
    auto entries = parse_manifest(text);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].name == "K4");
    CHECK(entries[0].family == "complete");
    CHECK(entries[0].params == std::vector<long long>{4});
    CHECK(entries[0].det == 3);
    CHECK(entries[0].det_prime == 2);
    CHECK(entries[0].aut_order == 24);
    CHECK(!entries[0].efi.has_value());
    CHECK(entries[1].named == "G4");
    CHECK(entries[1].efi == true);
    CHECK(!entries[1].det_prime.has_value());

    CHECK(manifest_graph(entries[0]) == complete_graph(4));
    CHECK(manifest_graph(entries[1]).vertex_count() == 18);
}

TEST_CASE("manifest parse errors carry offsets") {
    CHECK_THROWS_AS(parse_manifest("det = 3\n"), ParseError);          // key before table
    CHECK_THROWS_AS(parse_manifest("[[graph]]\nfoo = 3\n"), ParseError);
    CHECK_THROWS_AS(parse_manifest("[[graph]]\nname = \"x\nd\n"), ParseError);
    CHECK_THROWS_AS(parse_manifest("[[graph]]\ndet = x\n"), ParseError);
    CHECK_THROWS_AS(parse_manifest("[[other]]\n"), ParseError);
    CHECK_THROWS_AS(parse_manifest("[[graph]]\nparams = [1, 2\n"), ParseError);
}

TEST_CASE("manifest graphs") {
    ManifestEntry e;
    e.name = "x";
    e.family = "hypercube";
    e.params = {3};
    CHECK(manifest_graph(e) == hypercube(3));

    e.family = "join_nk";
    e.params = {1};
    Graph j = manifest_graph(e);
    CHECK(j.vertex_count() == 4);
    CHECK(j.edge_count() == 5);

    e.family = "nonsense";
    CHECK_THROWS_AS(manifest_graph(e), InvalidArgument);

    ManifestEntry both;
    both.family = "path";
    both.params = {3};
    both.graph6_text = "A_";
    CHECK_THROWS_AS(manifest_graph(both), InvalidArgument);

    ManifestEntry none;
    CHECK_THROWS_AS(manifest_graph(none), InvalidArgument);

    ManifestEntry g6;
    g6.graph6_text = "A_";
    CHECK(manifest_graph(g6) == complete_graph(2));
}
