#pragma once

#include "unav/rational.hpp"
#include "unav/vertex_set.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace unav {

enum class Color { Red, Blue };

constexpr Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

inline const char* color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

// Per-vertex minimum-degree requirement, one of:
//   QuarterPlus: d_c(v) >= n/4 + eps*n in both colors, eps in (0, 1/4);
//   Linear:      d_c(v) >= eps*n      in both colors, eps in (0, 1/2).
struct DegreeThreshold {
    enum class Kind { QuarterPlus, Linear };

    Kind kind;
    Rat eps;

    static DegreeThreshold quarter_plus(const Rat& eps);
    static DegreeThreshold linear(const Rat& eps);

    // Exact rational bound a degree must meet at vertex count n.
    Rat bound(std::size_t n) const;
};

// Immutable 2-edge-coloring of the complete graph on n vertices. Red
// adjacency is stored; blue is its complement, which makes the two-color
// partition structural rather than checked.
class GraphColoring {
public:
    static GraphColoring from_red_edges(std::size_t n,
                                        const std::vector<std::pair<Vertex, Vertex>>& red_pairs);

    // Takes ownership of a prebuilt adjacency; validates symmetry and
    // irreflexivity.
    static GraphColoring from_red_adjacency(std::size_t n, std::vector<VertexSet> red_adj);

    std::size_t n() const { return n_; }

    Color color_of(Vertex u, Vertex v) const;

    const VertexSet& red_neighbors(Vertex v) const;

    VertexSet neighbors(Color c, Vertex v) const;

    std::size_t degree(Color c, Vertex v) const;
    std::size_t degree(Color c, Vertex v, const VertexSet& within) const;

    // Number of c-colored pairs with one endpoint in A and one in B;
    // A and B must be disjoint.
    std::size_t pair_count(Color c, const VertexSet& A, const VertexSet& B) const;

    // Number of c-colored pairs with both endpoints in A.
    std::size_t pair_count_within(Color c, const VertexSet& A) const;

    // Vertices outside S adjacent in color c to every member of S; empty S
    // yields all vertices.
    VertexSet common_neighbors(Color c, const VertexSet& S) const;

    bool min_degree_ok(const DegreeThreshold& th) const;

    // Restriction to S (|S| >= 2) under the order-preserving relabeling;
    // second element maps new ids back to originals.
    std::pair<GraphColoring, std::vector<Vertex>> induced(const VertexSet& S) const;

    GraphColoring color_swapped() const;

    VertexSet vertices() const { return VertexSet::full(n_); }

    bool operator==(const GraphColoring& other) const {
        return n_ == other.n_ && red_adj_ == other.red_adj_;
    }

    bool operator!=(const GraphColoring& other) const { return !(*this == other); }

private:
    GraphColoring(std::size_t n, std::vector<VertexSet> red_adj)
        : n_(n), red_adj_(std::move(red_adj)) {}

    void check_vertex(Vertex v) const;

    std::size_t n_;
    std::vector<VertexSet> red_adj_;
};

// Canonical UPC text form (see decode for the grammar). decode(encode(g))
// reproduces g exactly.
std::string encode(const GraphColoring& g);

// Strict parser for the UPC format: line 1 is "UPC1 <n>"; then n-1 lines,
// where the line for vertex i holds characters {R,B} for edges {i, i+1+j}
// in column j; every line ends with '\n' and nothing follows the last.
// Throws FormatError with 1-based line/column on any deviation.
GraphColoring decode(const std::string& text);

}  // namespace unav
