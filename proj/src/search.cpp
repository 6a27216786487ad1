#include "unav/search.hpp"

#include "unav/errors.hpp"

#include <string>
#include <utility>
#include <vector>

namespace unav {

BudgetGauge::BudgetGauge(const SearchBudget& budget) : budget_(budget) {
    if (budget.max_nodes < 1) throw TooSmall("search budget needs max_nodes >= 1");
}

bool BudgetGauge::step() {
    if (exhausted_) return false;
    if (used_ >= budget_.max_nodes) {
        if (budget_.on_exhaust == OnExhaust::Error) {
            throw BudgetExhausted("search budget of " + std::to_string(budget_.max_nodes) +
                                  " nodes exhausted");
        }
        exhausted_ = true;
        return false;
    }
    ++used_;
    return true;
}

namespace {

// Drops every element <= v, leaving the strictly-greater tail.
VertexSet strictly_above(VertexSet s, Vertex v) {
    for (Vertex u = s.first(); u != VertexSet::npos && u <= v;) {
        Vertex nx = s.next(u);
        s.erase(u);
        u = nx;
    }
    return s;
}

// Depth-first clique enumeration in ascending-vertex order, which makes the
// visit order lexicographic over sorted tuples. `color` empty means the color
// is still open and gets pinned once two vertices are in.
class CliqueEnum {
  public:
    CliqueEnum(const GraphColoring& g, std::size_t t, BudgetGauge& gauge,
               const std::function<bool(const VertexSet&)>& visit)
        : g_(g), t_(t), gauge_(gauge), visit_(visit), cur_(g.n()) {}

    // Returns false iff the budget tripped before finishing.
    bool run(const VertexSet& within, std::optional<Color> color) {
        extend(within, color);
        return !tripped_;
    }

  private:
    void extend(const VertexSet& cand, std::optional<Color> color) {
        if (!gauge_.step()) {
            tripped_ = true;
            return;
        }
        if (cur_.size() == t_) {
            if (!visit_(cur_)) stopped_ = true;
            return;
        }
        std::size_t need = t_ - cur_.size();
        std::size_t left = cand.size();
        if (left < need) return;
        for (Vertex v : cand.to_vector()) {
            if (left < need) break;
            --left;
            std::optional<Color> next_color = color;
            VertexSet next = strictly_above(cand, v);
            if (next_color) {
                next &= g_.neighbors(*next_color, v);
            } else if (cur_.size() == 1) {
                Vertex u = cur_.first();
                next_color = g_.color_of(u, v);
                next &= g_.neighbors(*next_color, u);
                next &= g_.neighbors(*next_color, v);
            }
            cur_.insert(v);
            extend(next, next_color);
            cur_.erase(v);
            if (stopped_ || tripped_) return;
        }
    }

    const GraphColoring& g_;
    std::size_t t_;
    BudgetGauge& gauge_;
    const std::function<bool(const VertexSet&)>& visit_;
    VertexSet cur_;
    bool stopped_ = false;
    bool tripped_ = false;
};

void check_search_t(std::size_t t, std::size_t factor, std::size_t n, const char* what) {
    if (t < 1) throw TooSmall(std::string(what) + " needs t >= 1");
    if (factor * t > n) {
        throw TooLarge(std::string(what) + " needs " +
                       (factor == 1 ? std::string("t") : std::to_string(factor) + "t") +
                       " <= n, got t=" + std::to_string(t) + ", n=" + std::to_string(n));
    }
}

template <typename W>
SearchResult<W> settle(std::optional<W> found, const BudgetGauge& gauge) {
    if (found) return {SearchStatus::Found, std::move(found)};
    if (gauge.exhausted()) return {SearchStatus::Unknown, std::nullopt};
    return {SearchStatus::None, std::nullopt};
}

void require_sound(bool ok, const char* what) {
    if (!ok) {
        throw InvalidWitness(std::string("search produced a ") + what +
                             " that fails verification");
    }
}

std::optional<InducedBiclique> biclique_search(const GraphColoring& g, Color color,
                                               std::size_t t, BudgetGauge& gauge) {
    std::optional<InducedBiclique> found;
    for_each_mono_clique(g, opposite(color), t, VertexSet::full(g.n()), gauge,
                         [&](const VertexSet& A) {
                             VertexSet zone = g.common_neighbors(color, A);
                             if (zone.size() >= t) {
                                 for_each_mono_clique(g, opposite(color), t, zone, gauge,
                                                      [&](const VertexSet& B) {
                                                          found = InducedBiclique{color, A, B};
                                                          return false;
                                                      });
                             }
                             return !found.has_value();
                         });
    return found;
}

std::optional<PPattern> p_pattern_search(const GraphColoring& g, std::size_t t,
                                         BudgetGauge& gauge) {
    std::optional<PPattern> found;
    for_each_mono_clique(g, Color::Red, t, VertexSet::full(g.n()), gauge, [&](const VertexSet& V1) {
        // The V1<->V2, V3<->V4 swap symmetry is cut by demanding
        // min(V1) < min(V2).
        VertexSet red1 = g.common_neighbors(Color::Red, V1);
        VertexSet cand2 = strictly_above(red1, V1.first());
        for_each_mono_clique(g, Color::Red, t, cand2, gauge, [&](const VertexSet& V2) {
            VertexSet cand3 = red1 & g.common_neighbors(Color::Blue, V2);
            for_each_mono_clique(g, Color::Blue, t, cand3, gauge, [&](const VertexSet& V3) {
                VertexSet cand4 = g.common_neighbors(Color::Blue, V3) &
                                  g.common_neighbors(Color::Blue, V1) &
                                  g.common_neighbors(Color::Red, V2);
                for_each_mono_clique(g, Color::Blue, t, cand4, gauge, [&](const VertexSet& V4) {
                    found = PPattern{{V1, V2, V3, V4}};
                    return false;
                });
                return !found.has_value();
            });
            return !found.has_value();
        });
        return !found.has_value();
    });
    return found;
}

std::optional<AltBlowup> alt_blowup_search(const GraphColoring& g, std::size_t t,
                                           BudgetGauge& gauge) {
    std::optional<AltBlowup> found;
    for_each_homogeneous_clique(g, t, VertexSet::full(g.n()), gauge, [&](const VertexSet& A0) {
        VertexSet cand1 = g.common_neighbors(Color::Red, A0);
        for_each_homogeneous_clique(g, t, cand1, gauge, [&](const VertexSet& A1) {
            // Diagonals are unconstrained, so disjointness from the opposite
            // class must be imposed by hand.
            VertexSet cand2 = g.common_neighbors(Color::Blue, A1) - A0;
            for_each_homogeneous_clique(g, t, cand2, gauge, [&](const VertexSet& A2) {
                VertexSet cand3 = (g.common_neighbors(Color::Red, A2) &
                                   g.common_neighbors(Color::Blue, A0)) -
                                  A1;
                for_each_homogeneous_clique(g, t, cand3, gauge, [&](const VertexSet& A3) {
                    found = AltBlowup{{A0, A1, A2, A3}};
                    return false;
                });
                return !found.has_value();
            });
            return !found.has_value();
        });
        return !found.has_value();
    });
    return found;
}

}  // namespace

bool for_each_mono_clique(const GraphColoring& g, Color color, std::size_t t,
                          const VertexSet& within, BudgetGauge& gauge,
                          const std::function<bool(const VertexSet&)>& visit) {
    if (t < 1) throw TooSmall("clique enumeration needs t >= 1");
    if (within.universe() != g.n()) {
        throw SizeMismatch("clique enumeration: set universe does not match the graph");
    }
    return CliqueEnum(g, t, gauge, visit).run(within, color);
}

bool for_each_homogeneous_clique(const GraphColoring& g, std::size_t t, const VertexSet& within,
                                 BudgetGauge& gauge,
                                 const std::function<bool(const VertexSet&)>& visit) {
    if (t < 1) throw TooSmall("clique enumeration needs t >= 1");
    if (within.universe() != g.n()) {
        throw SizeMismatch("clique enumeration: set universe does not match the graph");
    }
    return CliqueEnum(g, t, gauge, visit).run(within, std::nullopt);
}

SearchResult<MonoClique> find_mono_clique_within(const GraphColoring& g, Color color,
                                                 std::size_t t, const VertexSet& within,
                                                 const SearchBudget& budget) {
    check_search_t(t, 1, g.n(), "clique search");
    BudgetGauge gauge(budget);
    std::optional<MonoClique> found;
    for_each_mono_clique(g, color, t, within, gauge, [&](const VertexSet& S) {
        found = MonoClique{color, S};
        return false;
    });
    if (found) require_sound(verify_mono_clique(g, color, found->members), "clique");
    return settle(std::move(found), gauge);
}

SearchResult<MonoClique> find_mono_clique(const GraphColoring& g, Color color, std::size_t t,
                                          const SearchBudget& budget) {
    return find_mono_clique_within(g, color, t, VertexSet::full(g.n()), budget);
}

SearchResult<InducedBiclique> find_induced_biclique(const GraphColoring& g, Color color,
                                                    std::size_t t, const SearchBudget& budget) {
    check_search_t(t, 2, g.n(), "biclique search");
    BudgetGauge gauge(budget);
    std::optional<InducedBiclique> found = biclique_search(g, color, t, gauge);
    if (found) {
        require_sound(verify_induced_biclique(g, color, found->side_a, found->side_b),
                      "biclique");
    }
    return settle(std::move(found), gauge);
}

SearchResult<PPattern> find_p_pattern(const GraphColoring& g, std::size_t t,
                                      const SearchBudget& budget) {
    check_search_t(t, 4, g.n(), "P-pattern search");
    BudgetGauge gauge(budget);
    std::optional<PPattern> found = p_pattern_search(g, t, gauge);
    if (found) {
        require_sound(verify_p_pattern(g, found->parts[0], found->parts[1], found->parts[2],
                                       found->parts[3]),
                      "P-pattern");
    }
    return settle(std::move(found), gauge);
}

SearchResult<AltBlowup> find_alt_blowup(const GraphColoring& g, std::size_t t,
                                        const SearchBudget& budget) {
    check_search_t(t, 4, g.n(), "blowup search");
    BudgetGauge gauge(budget);
    std::optional<AltBlowup> found = alt_blowup_search(g, t, gauge);
    if (found) {
        require_sound(verify_alt_blowup(g, found->classes[0], found->classes[1],
                                        found->classes[2], found->classes[3]),
                      "blowup");
    }
    return settle(std::move(found), gauge);
}

SearchResult<LocalPattern> find_local_pattern(const GraphColoring& g, std::size_t t,
                                              const SearchBudget& budget) {
    check_search_t(t, 2, g.n(), "local pattern search");
    BudgetGauge gauge(budget);
    std::optional<LocalPattern> found;
    for (Color c : {Color::Red, Color::Blue}) {
        if (auto bic = biclique_search(g, c, t, gauge)) {
            found = LocalPattern{*bic};
            break;
        }
        if (gauge.exhausted()) return {SearchStatus::Unknown, std::nullopt};
    }
    if (!found && 4 * t <= g.n()) {
        if (auto p = p_pattern_search(g, t, gauge)) found = LocalPattern{*p};
    }
    if (found) require_sound(verify_local_pattern(g, *found, t), "local pattern");
    return settle(std::move(found), gauge);
}

ColoringStream::ColoringStream(std::size_t n) : n_(n) {
    if (n < 2) throw TooSmall("coloring stream needs n >= 2");
    if (n > 7) throw TooLarge("coloring stream supports n <= 7, got n=" + std::to_string(n));
    total_ = std::uint64_t(1) << (n * (n - 1) / 2);
}

std::optional<GraphColoring> ColoringStream::next() {
    if (mask_ >= total_) return std::nullopt;
    std::vector<std::pair<Vertex, Vertex>> red;
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j, ++bit) {
            if (mask_ >> bit & 1) red.push_back({Vertex(i), Vertex(j)});
        }
    }
    ++mask_;
    return GraphColoring::from_red_edges(n_, red);
}

ColoringStream all_colorings(std::size_t n) { return ColoringStream(n); }

}  // namespace unav
