#pragma once

#include "unav/graph.hpp"
#include "unav/rational.hpp"
#include "unav/vertex_set.hpp"

#include <array>
#include <cstddef>
#include <cstdint>

namespace unav {

struct PPatternInstance {
    GraphColoring coloring;
    std::array<VertexSet, 4> parts;
};

// The four-block coloring on 4m vertices: parts V1=[0,m), V2=[m,2m),
// V3=[2m,3m), V4=[3m,4m); V1 u V2 internally red, V3 u V4 internally blue,
// V1-V3 and V2-V4 red, V1-V4 and V2-V3 blue. Every vertex ends with exactly
// m neighbors in one color and 3m-1 in the other.
PPatternInstance gen_p_pattern(std::size_t m);

// Smallest per-part size m with m^4 >= (1/eps)^t, i.e. ceil(eps^{-t/4}),
// decided in exact integer arithmetic.
std::size_t tightness_part_size(const Rat& eps, std::size_t t);

// Near-extremal randomized coloring: start from gen_p_pattern(m) with
// m = tightness_part_size(eps, t), then recolor each edge inside V1 u V2
// blue with probability recolor_p, and each edge inside V3 u V4 red with the
// same probability, independently. Cross-block edges never change. Draws
// happen in lexicographic pair order, one per inside-pair, so equal seeds
// give identical colorings.
GraphColoring gen_tightness(const Rat& eps, std::size_t t, const Rat& recolor_p,
                            std::uint64_t seed);

// Uniform coloring repaired to min_degree_ok(Linear(delta)): while a vertex
// falls short of ceil(delta*n) in some color, flip one uniformly random
// incident edge of the other color whose far endpoint can spare it. Throws
// RepairExhausted if max_repair_rounds flips do not reach the threshold.
GraphColoring gen_random_min_degree(std::size_t n, const Rat& delta, std::uint64_t seed,
                                    std::size_t max_repair_rounds = 10000);

// Every pair independently red with probability p, in lexicographic pair
// order.
GraphColoring gen_uniform(std::size_t n, const Rat& p, std::uint64_t seed);

}  // namespace unav
