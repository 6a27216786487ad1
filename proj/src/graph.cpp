#include "unav/graph.hpp"

#include "unav/errors.hpp"

#include <algorithm>

namespace unav {

DegreeThreshold DegreeThreshold::quarter_plus(const Rat& eps) {
    if (eps <= 0 || eps >= Rat(1, 4)) {
        throw PreconditionFailed("QuarterPlus requires eps in (0, 1/4), got " + format_rat(eps));
    }
    return DegreeThreshold{Kind::QuarterPlus, eps};
}

DegreeThreshold DegreeThreshold::linear(const Rat& eps) {
    if (eps <= 0 || eps >= Rat(1, 2)) {
        throw PreconditionFailed("Linear requires eps in (0, 1/2), got " + format_rat(eps));
    }
    return DegreeThreshold{Kind::Linear, eps};
}

Rat DegreeThreshold::bound(std::size_t n) const {
    Rat nn(static_cast<unsigned long>(n));
    if (kind == Kind::QuarterPlus) return Rat(nn / 4 + eps * nn);
    return Rat(eps * nn);
}

GraphColoring GraphColoring::from_red_edges(
    std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& red_pairs) {
    if (n < 2) throw TooSmall("vertex count must be at least 2, got " + std::to_string(n));
    if (n > kMaxVertices) {
        throw TooLarge("vertex count " + std::to_string(n) + " exceeds max " +
                       std::to_string(kMaxVertices));
    }
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (const auto& [u, v] : red_pairs) {
        if (u >= n || v >= n) {
            throw InvalidVertex("edge endpoint " + std::to_string(std::max(u, v)) +
                                " outside 0.." + std::to_string(n - 1));
        }
        if (u == v) throw SelfLoop("self loop at vertex " + std::to_string(u));
        if (adj[u].contains(v)) {
            throw DuplicatePair("duplicate pair {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
        }
        adj[u].insert(v);
        adj[v].insert(u);
    }
    return GraphColoring(n, std::move(adj));
}

GraphColoring GraphColoring::from_red_adjacency(std::size_t n, std::vector<VertexSet> red_adj) {
    if (n < 2) throw TooSmall("vertex count must be at least 2, got " + std::to_string(n));
    if (n > kMaxVertices) {
        throw TooLarge("vertex count " + std::to_string(n) + " exceeds max " +
                       std::to_string(kMaxVertices));
    }
    if (red_adj.size() != n) throw SizeMismatch("adjacency rows != n");
    for (Vertex u = 0; u < n; ++u) {
        if (red_adj[u].universe() != n) throw SizeMismatch("adjacency row universe != n");
        if (red_adj[u].contains(u)) throw SelfLoop("self loop at vertex " + std::to_string(u));
        for (Vertex v : red_adj[u]) {
            if (!red_adj[v].contains(u)) {
                throw UnavError("asymmetric red adjacency at {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
            }
        }
    }
    return GraphColoring(n, std::move(red_adj));
}

void GraphColoring::check_vertex(Vertex v) const {
    if (v >= n_) {
        throw InvalidVertex("vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(n_ - 1));
    }
}

Color GraphColoring::color_of(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw SelfLoop("color_of on identical endpoints " + std::to_string(u));
    return red_adj_[u].contains(v) ? Color::Red : Color::Blue;
}

const VertexSet& GraphColoring::red_neighbors(Vertex v) const {
    check_vertex(v);
    return red_adj_[v];
}

VertexSet GraphColoring::neighbors(Color c, Vertex v) const {
    check_vertex(v);
    if (c == Color::Red) return red_adj_[v];
    VertexSet blue = red_adj_[v].complement();
    blue.erase(v);
    return blue;
}

std::size_t GraphColoring::degree(Color c, Vertex v) const {
    check_vertex(v);
    std::size_t red = red_adj_[v].size();
    return c == Color::Red ? red : n_ - 1 - red;
}

std::size_t GraphColoring::degree(Color c, Vertex v, const VertexSet& within) const {
    check_vertex(v);
    if (within.universe() != n_) throw SizeMismatch("within-set universe != n");
    std::size_t red = red_adj_[v].intersection_size(within);
    if (c == Color::Red) return red;
    return within.size() - (within.contains(v) ? 1 : 0) - red;
}

std::size_t GraphColoring::pair_count(Color c, const VertexSet& A, const VertexSet& B) const {
    if (A.universe() != n_ || B.universe() != n_) throw SizeMismatch("set universe != n");
    if (A.intersects(B)) throw OverlappingSets("pair_count requires disjoint sets");
    std::size_t red = 0;
    for (Vertex a : A) red += red_adj_[a].intersection_size(B);
    return c == Color::Red ? red : A.size() * B.size() - red;
}

std::size_t GraphColoring::pair_count_within(Color c, const VertexSet& A) const {
    if (A.universe() != n_) throw SizeMismatch("set universe != n");
    std::size_t red2 = 0;
    for (Vertex a : A) red2 += red_adj_[a].intersection_size(A);
    std::size_t red = red2 / 2;
    std::size_t size = A.size();
    return c == Color::Red ? red : size * (size - 1) / 2 - red;
}

VertexSet GraphColoring::common_neighbors(Color c, const VertexSet& S) const {
    if (S.universe() != n_) throw SizeMismatch("set universe != n");
    VertexSet acc = VertexSet::full(n_);
    for (Vertex s : S) acc &= neighbors(c, s);
    acc -= S;
    return acc;
}

bool GraphColoring::min_degree_ok(const DegreeThreshold& th) const {
    Rat bound = th.bound(n_);
    for (Vertex v = 0; v < n_; ++v) {
        std::size_t red = red_adj_[v].size();
        std::size_t blue = n_ - 1 - red;
        if (Rat(static_cast<unsigned long>(red)) < bound ||
            Rat(static_cast<unsigned long>(blue)) < bound) {
            return false;
        }
    }
    return true;
}

std::pair<GraphColoring, std::vector<Vertex>> GraphColoring::induced(const VertexSet& S) const {
    if (S.universe() != n_) throw SizeMismatch("set universe != n");
    std::vector<Vertex> map = S.to_vector();
    std::size_t m = map.size();
    if (m < 2) throw TooSmall("induced subgraph needs at least 2 vertices");
    std::vector<VertexSet> adj(m, VertexSet(m));
    for (Vertex i = 0; i < m; ++i) {
        const VertexSet& row = red_adj_[map[i]];
        for (Vertex j = static_cast<Vertex>(i + 1); j < m; ++j) {
            if (row.contains(map[j])) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    return {GraphColoring(m, std::move(adj)), std::move(map)};
}

GraphColoring GraphColoring::color_swapped() const {
    std::vector<VertexSet> adj(n_, VertexSet(n_));
    for (Vertex v = 0; v < n_; ++v) {
        adj[v] = red_adj_[v].complement();
        adj[v].erase(v);
    }
    return GraphColoring(n_, std::move(adj));
}

std::string encode(const GraphColoring& g) {
    std::size_t n = g.n();
    std::string out = "UPC1 " + std::to_string(n) + "\n";
    out.reserve(out.size() + n * n / 2 + n);
    for (Vertex i = 0; i + 1 < n; ++i) {
        const VertexSet& row = g.red_neighbors(i);
        for (Vertex j = static_cast<Vertex>(i + 1); j < n; ++j) {
            out.push_back(row.contains(j) ? 'R' : 'B');
        }
        out.push_back('\n');
    }
    return out;
}

namespace {

// Pulls one '\n'-terminated line starting at `pos`; the newline is consumed
// but not returned.
std::string take_line(const std::string& text, std::size_t& pos, std::size_t line_no) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) {
        throw FormatError(line_no, text.size() - pos + 1, "missing newline");
    }
    std::string line = text.substr(pos, nl - pos);
    pos = nl + 1;
    return line;
}

}  // namespace

GraphColoring decode(const std::string& text) {
    std::size_t pos = 0;
    std::string header = take_line(text, pos, 1);
    const std::string magic = "UPC1 ";
    for (std::size_t i = 0; i < magic.size(); ++i) {
        if (i >= header.size() || header[i] != magic[i]) {
            throw FormatError(1, i + 1, "expected 'UPC1 <n>' header");
        }
    }
    std::string digits = header.substr(magic.size());
    if (digits.empty() || digits.size() > 4 ||
        digits.find_first_not_of("0123456789") != std::string::npos ||
        (digits.size() > 1 && digits[0] == '0')) {
        throw FormatError(1, magic.size() + 1, "malformed vertex count");
    }
    std::size_t n = static_cast<std::size_t>(std::stoul(digits));
    if (n < 2) throw FormatError(1, magic.size() + 1, "vertex count must be at least 2");
    if (n > kMaxVertices) {
        throw FormatError(1, magic.size() + 1,
                          "vertex count exceeds max " + std::to_string(kMaxVertices));
    }

    std::vector<VertexSet> adj(n, VertexSet(n));
    for (Vertex i = 0; i + 1 < n; ++i) {
        std::size_t line_no = static_cast<std::size_t>(i) + 2;
        std::string line = take_line(text, pos, line_no);
        std::size_t expected = n - 1 - i;
        if (line.size() != expected) {
            throw FormatError(line_no, std::min(line.size(), expected) + 1,
                              "expected " + std::to_string(expected) + " characters, got " +
                                  std::to_string(line.size()));
        }
        for (std::size_t j = 0; j < expected; ++j) {
            char c = line[j];
            if (c != 'R' && c != 'B') {
                throw FormatError(line_no, j + 1, std::string("illegal character '") + c + "'");
            }
            if (c == 'R') {
                Vertex other = static_cast<Vertex>(i + 1 + j);
                adj[i].insert(other);
                adj[other].insert(i);
            }
        }
    }
    if (pos != text.size()) {
        throw FormatError(static_cast<std::size_t>(n) + 1, 1, "trailing content after last line");
    }
    return GraphColoring::from_red_adjacency(n, std::move(adj));
}

}  // namespace unav
