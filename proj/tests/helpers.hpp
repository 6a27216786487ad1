#pragma once

// Shared fixtures for the test suite.

#include <unav/graph.hpp>
#include <unav/vertex_set.hpp>

#include <initializer_list>
#include <utility>
#include <vector>

namespace fixtures {

using unav::GraphColoring;
using unav::Vertex;
using unav::VertexSet;

// 4 vertices, red edges {0,1},{0,2},{1,3}: the smallest P-construction.
inline GraphColoring p1() {
    return GraphColoring::from_red_edges(4, {{0, 1}, {0, 2}, {1, 3}});
}

// K_5 whose red edges form the 5-cycle 0-1-2-3-4-0; neither color has a
// triangle.
inline GraphColoring red_c5() {
    return GraphColoring::from_red_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

// K_4 whose red edges form the complete bipartite graph {0,1}x{2,3}, so the
// whole graph is a red induced K_{2,2}.
inline GraphColoring red_k22() {
    return GraphColoring::from_red_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

// K_4 with red {0,1},{2,3},{0,2}: singleton classes {0},{1},{2},{3} form an
// alternating blowup in canonical order.
inline GraphColoring alt4() {
    return GraphColoring::from_red_edges(4, {{0, 1}, {2, 3}, {0, 2}});
}

inline VertexSet vs(std::size_t universe, std::initializer_list<Vertex> ids) {
    return VertexSet(universe, ids);
}

// Builds the coloring on n vertices whose red pairs are exactly those the
// predicate accepts (called once per unordered pair with i < j).
template <class Pred>
inline GraphColoring build(std::size_t n, Pred red) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (red(i, j)) pairs.emplace_back(i, j);
        }
    }
    return GraphColoring::from_red_edges(n, pairs);
}

inline VertexSet range(std::size_t universe, Vertex lo, Vertex hi) {
    VertexSet s(universe);
    for (Vertex v = lo; v < hi; ++v) s.insert(v);
    return s;
}

}  // namespace fixtures
