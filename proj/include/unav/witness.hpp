#pragma once

#include "unav/graph.hpp"
#include "unav/vertex_set.hpp"

#include <json.hpp>

#include <array>
#include <string>
#include <variant>

namespace unav {

// Pattern certificates. Sets are VertexSets, so members are inherently
// sorted ascending; verifiers check the structural demands (disjointness,
// sizes, edge colors) against a concrete coloring.

struct MonoClique {
    Color color;
    VertexSet members;
};

// 2t vertices whose `color` edges form exactly the complete bipartite graph
// between side_a and side_b: cross pairs in `color`, both sides cliques in
// the opposite color.
struct InducedBiclique {
    Color color;
    VertexSet side_a;
    VertexSet side_b;
};

// Four equal parts V1..V4: V1 u V2 internally red, V3 u V4 internally blue,
// V1-V3 and V2-V4 red, V1-V4 and V2-V3 blue.
struct PPattern {
    std::array<VertexSet, 4> parts;
};

// Four disjoint monochromatic cliques A0..A3 with cross sides A0-A1, A2-A3
// all red and A1-A2, A3-A0 all blue; diagonals unconstrained.
struct AltBlowup {
    std::array<VertexSet, 4> classes;
};

struct LocalPattern {
    std::variant<InducedBiclique, PPattern> inner;
};

using PatternWitness = std::variant<MonoClique, InducedBiclique, PPattern, AltBlowup, LocalPattern>;

bool verify_mono_clique(const GraphColoring& g, Color color, const VertexSet& S);

bool verify_induced_biclique(const GraphColoring& g, Color color, const VertexSet& A,
                             const VertexSet& B);

bool verify_p_pattern(const GraphColoring& g, const VertexSet& V1, const VertexSet& V2,
                      const VertexSet& V3, const VertexSet& V4);

bool verify_alt_blowup(const GraphColoring& g, const VertexSet& A0, const VertexSet& A1,
                       const VertexSet& A2, const VertexSet& A3);

// Checks the inner witness with every set size pinned to t.
bool verify_local_pattern(const GraphColoring& g, const LocalPattern& w, std::size_t t);

// Part size the local pattern was built at (side size for a biclique, part
// size for a P-pattern).
std::size_t local_pattern_t(const LocalPattern& w);

// Dispatches to the matching verifier (LocalPattern sizes are taken from the
// witness itself).
bool verify_witness(const GraphColoring& g, const PatternWitness& w);

// Stable identifier used in JSON and CSV output: "mono_clique",
// "induced_biclique", "p_pattern", "alt_blowup", "local_pattern".
std::string witness_kind(const PatternWitness& w);

nlohmann::json witness_to_json(const PatternWitness& w);

// Inverse of witness_to_json; `universe` fixes the VertexSet capacity.
// Throws FormatError on structural problems in the JSON.
PatternWitness witness_from_json(const nlohmann::json& j, std::size_t universe);

}  // namespace unav
