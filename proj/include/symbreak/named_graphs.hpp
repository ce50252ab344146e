#pragma once

#include "symbreak/errors.hpp"
#include "symbreak/graph.hpp"

namespace symbreak {

// Fixture graphs, 0-based.
//
//   G1        triangle {1,2,3} with pendant 0 attached at 1 (the paw)
//   G2        K_4 minus the edge {0,3} (the diamond)
//   G3        K_4
//   G4        3-regular graph on 18 vertices whose pointwise stabilizer of
//             any single vertex is trivial
//   EnvelopeH the triangular prism drawn as an envelope: triangles {1,2,4}
//             and {0,3,5} joined by the matching 0-1, 2-3, 4-5
//   K4MinusE  same adjacency as G2, kept as its own id
enum class NamedGraphId { G1, G2, G3, G4, EnvelopeH, K4MinusE };

inline Graph named_graph(NamedGraphId id) {
    switch (id) {
        case NamedGraphId::G1:
            return Graph(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}, "G1");
        case NamedGraphId::G2:
            return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}}, "G2");
        case NamedGraphId::G3:
            return complete_graph(4).with_name("G3");
        case NamedGraphId::G4:
            return Graph(18,
                         {{0, 9},  {0, 17}, {0, 15}, {1, 9},  {1, 10}, {1, 16}, {2, 10},
                          {2, 17}, {2, 11}, {3, 9},  {3, 11}, {3, 12}, {4, 10}, {4, 12},
                          {4, 13}, {5, 13}, {5, 14}, {5, 11}, {6, 14}, {6, 15}, {6, 12},
                          {7, 13}, {7, 15}, {7, 16}, {8, 14}, {8, 16}, {8, 17}},
                         "G4");
        case NamedGraphId::EnvelopeH:
            return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {2, 4}, {3, 5}, {0, 5}, {1, 4}},
                         "EnvelopeH");
        case NamedGraphId::K4MinusE:
            return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}}, "K4-e");
    }
    throw InvalidArgument("unknown named graph id");
}

inline const char* named_graph_label(NamedGraphId id) {
    switch (id) {
        case NamedGraphId::G1: return "G1";
        case NamedGraphId::G2: return "G2";
        case NamedGraphId::G3: return "G3";
        case NamedGraphId::G4: return "G4";
        case NamedGraphId::EnvelopeH: return "EnvelopeH";
        case NamedGraphId::K4MinusE: return "K4-e";
    }
    return "?";
}

}  // namespace symbreak
