#pragma once

#include "unav/graph.hpp"
#include "unav/rational.hpp"
#include "unav/search.hpp"
#include "unav/vertex_set.hpp"
#include "unav/witness.hpp"

#include <json.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace unav {

// Desk-scale stand-ins for the asymptotic constants. The pipelines' logic is
// scale-free; only the quantitative guarantees need astronomically large n,
// so every size that the source argument sets from n and eps is a knob here.
struct ExtractorParams {
    std::size_t block_size = 16;
    std::size_t clique_target = 6;
    Rat sparse_threshold = Rat(1, 100);
    std::size_t blowup_margin = 1;
    std::size_t max_rounds = 40;
    std::size_t oracle_cap = 64;
    std::size_t resample_limit = 200;
    unsigned slack_exponent = 2;
    std::uint64_t seed = 0;

    // block_size=max(4^t,16), clique_target=min(10t,2t+2),
    // sparse_threshold=eps^2, blowup_margin=1, max_rounds=40, oracle_cap=64,
    // resample_limit=200, slack_exponent=2.
    static ExtractorParams defaults(std::size_t t, const Rat& eps, std::uint64_t seed = 0);

    // Throws on violated invariants (counts >= 1, sparse_threshold in (0,1),
    // oracle_cap <= 64).
    void validate() const;
};

// Fixed vocabulary of trace step labels; ExtractionTrace::add rejects
// anything else.
extern const std::array<const char*, 25> kTraceLabels;
bool is_trace_label(std::string_view label);

struct TraceStep {
    std::string lemma;
    nlohmann::json sizes;  // {"name": count, ...}
    std::optional<Rat> density;
    std::string decision;
};

struct ExtractionTrace {
    std::vector<TraceStep> steps;

    void add(const std::string& lemma, nlohmann::json sizes, std::optional<Rat> density,
             std::string decision);
    nlohmann::json to_json() const;
};

struct FailureReport {
    std::string reason;
    nlohmann::json state_sizes;
};

// Exactly one of witness/failure is set; the trace is never empty.
template <typename W>
struct ExtractOutcome {
    std::optional<W> witness;
    std::optional<FailureReport> failure;
    ExtractionTrace trace;

    bool found() const { return witness.has_value(); }
};

// The refinement bookkeeping of the second pipeline: the random bipartition,
// the absorbed sets, the high-attachment witness sets, and the round index.
struct RefinementState {
    VertexSet x, y, x1, y1, x2, y2;
    std::size_t round = 0;
};

// Disjoint clique-free blocks of the first pipeline plus the residual.
struct BlockFamily {
    std::vector<VertexSet> red_blocks;
    std::vector<VertexSet> blue_blocks;
    VertexSet residual;
};

// Seeded uniform bipartition resampled until |X|,|Y| > n/3 and every vertex
// has >= eps*n/3 neighbors of each color in each part (all checks in exact
// rationals). Throws ResampleExhausted after params.resample_limit attempts,
// reporting the best attempt and the first failing vertex/condition.
std::pair<VertexSet, VertexSet> balanced_partition(const GraphColoring& g, const Rat& eps,
                                                   const ExtractorParams& params);

// Pivot walk: repeatedly take the lowest-id live vertex, keep its
// majority-color neighborhood (ties red), then return the first t pivots of
// the majority label, which form a monochromatic clique. Needs |S| >= 4^t.
MonoClique ramsey_clique(const GraphColoring& g, const VertexSet& S, std::size_t t);

struct KstResult {
    VertexSet s;  // k chosen vertices of A
    VertexSet n;  // their common `color` neighborhood within B
};

// Exact greedy subset selection meeting the dense-bipartite common-
// neighborhood bound: requires |A| >= k/alpha and
// pair_count(color,A,B) >= alpha|A||B|; the output satisfies
// |N| >= ceil((alpha/e)^k |B|). Each step picks the vertex maximizing the
// surviving binomial potential (exact big-integer arithmetic), which
// preserves the double-counting average.
KstResult kst_subset(const GraphColoring& g, const VertexSet& A, const VertexSet& B, Color color,
                     std::size_t k, const Rat& alpha);

struct RamseyKstResult {
    VertexSet s;  // k-subset of A, monochromatic to n in `color`
    Color color;
    VertexSet n;
    std::optional<MonoClique> clique;  // monochromatic k-clique inside n when found
};

// Majority-color kst_subset with alpha = 1/2, so |N| >= ceil(|B|/(2e)^k).
// When |B| >= (4e)^k the clique part is attempted as well (pivot walk when
// |N| >= 4^k, bounded complete search otherwise); it stays empty when no
// monochromatic k-clique exists in N at desk scale.
RamseyKstResult ramsey_kst(const GraphColoring& g, const VertexSet& A, const VertexSet& B,
                           std::size_t k);

// Dependent random choice: returns S of size >= a inside B such that every
// s-subset of S has >= m common `color` neighbors in A. Samples r vertices
// of A uniformly with replacement (seeded), takes their common neighborhood
// in B, then deletes the vertex in the most violating s-subsets until none
// remain; resamples up to max_attempts times. The exact-rational inequality
// |B|(d/e)^r - |B|^s m^r / |A|^r >= a is the precondition (d = actual
// density).
VertexSet drc_subset(const GraphColoring& g, const VertexSet& A, const VertexSet& B, Color color,
                     std::size_t a, std::size_t m, std::size_t r, std::size_t s,
                     std::uint64_t seed, std::size_t max_attempts = 64);

struct TripleResult {
    VertexSet a_prime;    // all-red to the clique
    MonoClique b_clique;  // monochromatic clique of size q inside B
    VertexSet c_prime;    // all-blue to the clique
    ExtractionTrace trace;
};

// Two chained dependent-random-choice stages plus a clique extraction:
// B1 <- drc over (A,B,Red), B2 <- drc over (C,B1,Blue), then a
// monochromatic q-clique B' in B2; A' = red-common(B') in A,
// C' = blue-common(B') in C (both non-empty by the drc guarantees with
// s=q, m=1). Requires A,B and B,C disjoint (A and C may overlap: the two
// outputs are color-separated), pair_count(Red,A,B) >= delta|A||B| and
// degree(Blue,u,C) >= delta|C| for every u in B. Throws StageFailed naming
// the stage that could not meet its floor at desk scale.
TripleResult lemma123_triple(const GraphColoring& g, const VertexSet& A, const VertexSet& B,
                             const VertexSet& C, const Rat& delta, std::size_t q,
                             const ExtractorParams& params);

struct SparseCertificate {
    Color color;
    std::uint64_t cross_count;
    std::uint64_t total_pairs;
    Rat density;
    Rat threshold;
};

// Both sides must be free of `color` cliques of size t (certified here by
// bounded complete search; a violation throws PreconditionFailed naming the
// clique). Returns the exact-count sparse certificate when the cross density
// is <= threshold; otherwise runs a complete sided search for an induced
// `color` K_{t,t} with side one in A and side two in B. A dense pair whose
// sided search comes up empty throws StageFailed("dense_unrealized") - the
// asymptotic argument promises a witness only at scale.
std::variant<SparseCertificate, InducedBiclique> sparse_pair_or_biclique(
    const GraphColoring& g, const VertexSet& A, const VertexSet& B, std::size_t t,
    const Rat& threshold, Color color = Color::Red);

// First pipeline: grow disjoint clique-free blocks (minting a block either
// certifies it clique-free or exposes an induced biclique on the spot), scan
// same-family block pairs with sparse_pair_or_biclique, expand into the
// residual while it is large, and finish with the exact final edge counts
// plus a bounded oracle probe. Requires min_degree_ok(QuarterPlus(eps)).
ExtractOutcome<InducedBiclique> extract_theorem1(const GraphColoring& g, const Rat& eps,
                                                 std::size_t t, const ExtractorParams& params);

// Second pipeline: bounded oracle quick-probe, balanced bipartition, then
// density-refinement rounds that either assemble an alternating blowup (and
// convert it) or absorb a set and tighten the state, with a bounded oracle
// probe before any failure report. Requires min_degree_ok(Linear(eps)).
ExtractOutcome<LocalPattern> extract_theorem2(const GraphColoring& g, const Rat& eps,
                                              std::size_t t, const ExtractorParams& params);

// Bounded complete search for a size-t pattern inside the blowup's 4
// classes. Requires a verifying blowup (else InvalidWitness) with classes of
// size >= blowup_margin*t and total size <= oracle_cap. Throws MarginTooSmall
// when the search certifies no pattern at this margin (or cannot finish).
LocalPattern blowup_to_pattern(const GraphColoring& g, const AltBlowup& w, std::size_t t,
                               const ExtractorParams& params);

namespace detail {

// Shared assembly for the two blowup-producing arguments: enumerate
// homogeneous t-cliques Cq in mono_pool; pool candidates are the u_pool
// vertices in the opposite(attach_color) common neighborhood of Cq with
// >= t attach_color neighbors in attach_clique; pigeonhole them by their
// lexicographically-first t-subset of attach_color neighbors inside
// attach_clique; feed the largest class to ramsey_kst against kst_clique;
// close the cycle with a homogeneous t-clique in the kst neighborhood and
// try the eight dihedral arrangements.
struct ChainInputs {
    VertexSet mono_pool;
    VertexSet attach_clique;
    MonoClique kst_clique;
    VertexSet u_pool;
    Color attach_color;
};

std::optional<AltBlowup> assemble_blowup_chain(const GraphColoring& g, const ChainInputs& in,
                                               std::size_t t, const ExtractorParams& params,
                                               ExtractionTrace& trace);

// Tries the eight dihedral orderings of the four classes and returns the
// first that verifies as an alternating blowup. Classes failing structural
// demands (overlap, size) yield nullopt rather than throwing.
std::optional<AltBlowup> arrange_blowup(const GraphColoring& g,
                                        const std::array<VertexSet, 4>& classes);

}  // namespace detail

}  // namespace unav
