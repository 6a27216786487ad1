#pragma once

#include "unav/graph.hpp"
#include "unav/vertex_set.hpp"
#include "unav/witness.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace unav {

enum class OnExhaust { ReportUnknown, Error };

struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;
    OnExhaust on_exhaust = OnExhaust::ReportUnknown;
};

// Counts search-tree nodes against a budget. Every node calls step() once;
// past the cap it either throws BudgetExhausted or keeps returning false so
// the search unwinds and reports Unknown.
class BudgetGauge {
  public:
    explicit BudgetGauge(const SearchBudget& budget);
    bool step();
    bool exhausted() const { return exhausted_; }
    std::uint64_t used() const { return used_; }

  private:
    SearchBudget budget_;
    std::uint64_t used_ = 0;
    bool exhausted_ = false;
};

enum class SearchStatus { Found, None, Unknown };

// None is a completeness claim: the whole space was enumerated and holds no
// witness. Unknown only ever comes from an exhausted budget.
template <typename W>
struct SearchResult {
    SearchStatus status = SearchStatus::None;
    std::optional<W> witness;

    bool found() const { return status == SearchStatus::Found; }
};

// Enumeration building block: visits every t-subset of `within` forming a
// clique in `color`, in lexicographic order of the ascending vertex tuple.
// `visit` returns true to continue, false to stop early. Returns false iff
// the gauge ran out before the enumeration finished (a visitor stop counts
// as finishing).
bool for_each_mono_clique(const GraphColoring& g, Color color, std::size_t t,
                          const VertexSet& within, BudgetGauge& gauge,
                          const std::function<bool(const VertexSet&)>& visit);

// Same, but the clique may be monochromatic in either color: the color is
// pinned by the first chosen pair, singletons qualify vacuously.
bool for_each_homogeneous_clique(const GraphColoring& g, std::size_t t, const VertexSet& within,
                                 BudgetGauge& gauge,
                                 const std::function<bool(const VertexSet&)>& visit);

// Lexicographically-first witnesses throughout; every returned witness is
// re-checked against its verifier before being handed out.

SearchResult<MonoClique> find_mono_clique(const GraphColoring& g, Color color, std::size_t t,
                                          const SearchBudget& budget = {});

// Clique members restricted to `within`.
SearchResult<MonoClique> find_mono_clique_within(const GraphColoring& g, Color color,
                                                 std::size_t t, const VertexSet& within,
                                                 const SearchBudget& budget = {});

SearchResult<InducedBiclique> find_induced_biclique(const GraphColoring& g, Color color,
                                                    std::size_t t,
                                                    const SearchBudget& budget = {});

SearchResult<PPattern> find_p_pattern(const GraphColoring& g, std::size_t t,
                                      const SearchBudget& budget = {});

SearchResult<AltBlowup> find_alt_blowup(const GraphColoring& g, std::size_t t,
                                        const SearchBudget& budget = {});

// Tries a red induced biclique, then blue, then a P-pattern (skipped when
// 4t > n, where none can exist).
SearchResult<LocalPattern> find_local_pattern(const GraphColoring& g, std::size_t t,
                                              const SearchBudget& budget = {});

// All 2^C(n,2) colorings of K_n exactly once, in a fixed order: the red-edge
// bitmask counts upward from 0, bit k giving the color of the k-th pair in
// lexicographic order ((0,1),(0,2),...,(n-2,n-1)).
class ColoringStream {
  public:
    explicit ColoringStream(std::size_t n);
    std::optional<GraphColoring> next();
    std::uint64_t total() const { return total_; }

  private:
    std::size_t n_;
    std::uint64_t total_;
    std::uint64_t mask_ = 0;
};

ColoringStream all_colorings(std::size_t n);

}  // namespace unav
