#include "unav/generate.hpp"

#include "unav/errors.hpp"
#include "unav/rng.hpp"

#include <string>
#include <utility>
#include <vector>

namespace unav {

PPatternInstance gen_p_pattern(std::size_t m) {
    if (m < 1) throw TooSmall("part size m must be >= 1");
    std::size_t n = 4 * m;
    if (n > kMaxVertices) {
        throw TooLarge("4m = " + std::to_string(n) + " exceeds max vertex count " +
                       std::to_string(kMaxVertices));
    }
    std::array<VertexSet, 4> parts = {VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n)};
    for (Vertex v = 0; v < n; ++v) parts[v / m].insert(v);

    std::vector<VertexSet> adj(n, VertexSet(n));
    VertexSet head = parts[0] | parts[1];
    for (Vertex v = 0; v < n; ++v) {
        std::size_t p = v / m;
        if (p <= 1) {
            adj[v] = head;
            adj[v].erase(v);
            adj[v] |= parts[p == 0 ? 2 : 3];
        } else {
            adj[v] = parts[p == 2 ? 0 : 1];
        }
    }
    return {GraphColoring::from_red_adjacency(n, std::move(adj)), std::move(parts)};
}

std::size_t tightness_part_size(const Rat& eps, std::size_t t) {
    if (eps <= 0 || eps > Rat(1, 4)) {
        throw PreconditionFailed("tightness eps must lie in (0, 1/4], got " + format_rat(eps));
    }
    if (t < 1) throw TooSmall("tightness t must be >= 1");
    BigInt p = numerator(eps);
    BigInt q = denominator(eps);
    BigInt lhs_scale = ipow(p, static_cast<unsigned>(t));
    BigInt rhs = ipow(q, static_cast<unsigned>(t));
    for (std::size_t m = 1; 4 * m <= kMaxVertices; ++m) {
        if (ipow(BigInt(static_cast<unsigned long>(m)), 4) * lhs_scale >= rhs) return m;
    }
    throw TooLarge("tightness part size for eps=" + format_rat(eps) +
                   ", t=" + std::to_string(t) + " exceeds the max vertex count");
}

GraphColoring gen_tightness(const Rat& eps, std::size_t t, const Rat& recolor_p,
                            std::uint64_t seed) {
    if (recolor_p < 0 || recolor_p >= 1) {
        throw PreconditionFailed("recolor probability must lie in [0,1), got " +
                                 format_rat(recolor_p));
    }
    std::size_t m = tightness_part_size(eps, t);
    PPatternInstance base = gen_p_pattern(m);
    std::size_t n = 4 * m;
    std::vector<VertexSet> adj;
    adj.reserve(n);
    for (Vertex v = 0; v < n; ++v) adj.push_back(base.coloring.red_neighbors(v));

    Rng rng(seed);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            std::size_t pi = i / m, pj = j / m;
            bool head = pi <= 1 && pj <= 1;
            bool tail = pi >= 2 && pj >= 2;
            if (!head && !tail) continue;
            if (!rng.bernoulli(recolor_p)) continue;
            if (head) {
                adj[i].erase(j);
                adj[j].erase(i);
            } else {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    return GraphColoring::from_red_adjacency(n, std::move(adj));
}

GraphColoring gen_uniform(std::size_t n, const Rat& p, std::uint64_t seed) {
    if (p < 0 || p > 1) {
        throw PreconditionFailed("edge probability must lie in [0,1], got " + format_rat(p));
    }
    if (n < 2) throw TooSmall("vertex count must be at least 2");
    if (n > kMaxVertices) throw TooLarge("vertex count exceeds " + std::to_string(kMaxVertices));
    Rng rng(seed);
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (rng.bernoulli(p)) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    return GraphColoring::from_red_adjacency(n, std::move(adj));
}

GraphColoring gen_random_min_degree(std::size_t n, const Rat& delta, std::uint64_t seed,
                                    std::size_t max_repair_rounds) {
    if (n < 2) throw TooSmall("vertex count must be at least 2");
    if (n > kMaxVertices) throw TooLarge("vertex count exceeds " + std::to_string(kMaxVertices));
    if (delta <= 0 || delta >= Rat(1, 2)) {
        throw PreconditionFailed("delta must lie in (0, 1/2), got " + format_rat(delta));
    }
    Rat bound = Rat(delta * Rat(static_cast<unsigned long>(n)));
    if (Rat(2) * bound > Rat(static_cast<unsigned long>(n - 1))) {
        throw PreconditionFailed("2*delta*n <= n-1 fails: both colors cannot reach " +
                                 format_rat(bound) + " on " + std::to_string(n - 1) +
                                 " incident edges");
    }
    BigInt target_big = ceil_rat(bound);
    std::size_t target = static_cast<std::size_t>(target_big.convert_to<unsigned long>());
    if (2 * target > n - 1) {
        throw PreconditionFailed("integer degree target " + std::to_string(target) +
                                 " infeasible for both colors on " + std::to_string(n - 1) +
                                 " incident edges");
    }

    Rng rng(seed);
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (rng.bernoulli(Rat(1, 2))) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }

    auto red_deg = [&](Vertex v) { return adj[v].size(); };
    auto deg = [&](Color c, Vertex v) {
        return c == Color::Red ? red_deg(v) : n - 1 - red_deg(v);
    };
    // A vertex short in one color always has opposite-color edges to spare
    // (2*target <= n-1), so each flip reduces its shortfall by one without
    // pushing any endpoint below target.
    for (std::size_t round = 0; round < max_repair_rounds; ++round) {
        Vertex u = VertexSet::npos;
        Color want = Color::Red;
        for (Vertex v = 0; v < n; ++v) {
            if (deg(Color::Red, v) < target) {
                u = v;
                want = Color::Red;
                break;
            }
            if (deg(Color::Blue, v) < target) {
                u = v;
                want = Color::Blue;
                break;
            }
        }
        if (u == VertexSet::npos) return GraphColoring::from_red_adjacency(n, std::move(adj));

        std::vector<Vertex> eligible;
        Color spare = opposite(want);
        for (Vertex w = 0; w < n; ++w) {
            if (w == u) continue;
            bool edge_is_spare = adj[u].contains(w) == (spare == Color::Red);
            if (edge_is_spare && deg(spare, w) >= target + 1) eligible.push_back(w);
        }
        if (eligible.empty()) {
            throw RepairExhausted("no flippable edge at vertex " + std::to_string(u) +
                                  " while short in " + color_name(want));
        }
        Vertex w = eligible[static_cast<std::size_t>(rng.below(eligible.size()))];
        if (want == Color::Red) {
            adj[u].insert(w);
            adj[w].insert(u);
        } else {
            adj[u].erase(w);
            adj[w].erase(u);
        }
    }
    throw RepairExhausted("min-degree repair did not converge within " +
                          std::to_string(max_repair_rounds) + " flips");
}

}  // namespace unav
