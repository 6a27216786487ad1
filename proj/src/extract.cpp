#include "unav/extract.hpp"

#include "unav/errors.hpp"
#include "unav/rng.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace unav {

namespace {

Rat rat_of(std::size_t v) { return Rat(static_cast<unsigned long long>(v)); }

VertexSet first_k(const VertexSet& s, std::size_t k) {
    VertexSet out(s.universe());
    std::size_t taken = 0;
    for (Vertex v : s) {
        if (taken == k) break;
        out.insert(v);
        ++taken;
    }
    return out;
}

// C(n, k) in 64 bits; desk operands stay far below the overflow guard.
std::uint64_t binom64(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > static_cast<unsigned __int128>(~std::uint64_t{0})) {
            throw TooLarge("binomial overflows 64 bits");
        }
    }
    return static_cast<std::uint64_t>(acc);
}

std::optional<VertexSet> first_homogeneous_clique(const GraphColoring& g, std::size_t t,
                                                  const VertexSet& within) {
    BudgetGauge gauge{SearchBudget{}};
    std::optional<VertexSet> out;
    for_each_homogeneous_clique(g, t, within, gauge, [&](const VertexSet& k) {
        out = k;
        return false;
    });
    return out;
}

Color clique_color(const GraphColoring& g, const VertexSet& members) {
    if (members.size() < 2) return Color::Red;
    Vertex a = members.first();
    return g.color_of(a, members.next(a));
}

// Largest monochromatic clique found inside `pool` with size in [t, cap],
// scanning sizes downward; nullopt when even size t is absent.
std::optional<MonoClique> extract_mono_clique(const GraphColoring& g, const VertexSet& pool,
                                              std::size_t t, std::size_t cap) {
    std::size_t hi = std::min(cap, pool.size());
    for (std::size_t s = hi; s + 1 > t; --s) {
        if (auto k = first_homogeneous_clique(g, s, pool)) {
            return MonoClique{clique_color(g, *k), *k};
        }
        if (s == 0) break;
    }
    return std::nullopt;
}

VertexSet map_back(const VertexSet& s, const std::vector<Vertex>& ids, std::size_t universe) {
    VertexSet out(universe);
    for (Vertex v : s) out.insert(ids[v]);
    return out;
}

LocalPattern map_back(const LocalPattern& w, const std::vector<Vertex>& ids,
                      std::size_t universe) {
    if (std::holds_alternative<InducedBiclique>(w.inner)) {
        const auto& b = std::get<InducedBiclique>(w.inner);
        return LocalPattern{InducedBiclique{b.color, map_back(b.side_a, ids, universe),
                                            map_back(b.side_b, ids, universe)}};
    }
    const auto& p = std::get<PPattern>(w.inner);
    return LocalPattern{PPattern{{map_back(p.parts[0], ids, universe),
                                  map_back(p.parts[1], ids, universe),
                                  map_back(p.parts[2], ids, universe),
                                  map_back(p.parts[3], ids, universe)}}};
}

void append_trace(ExtractionTrace& dst, const ExtractionTrace& src) {
    dst.steps.insert(dst.steps.end(), src.steps.begin(), src.steps.end());
}

}  // namespace

ExtractorParams ExtractorParams::defaults(std::size_t t, const Rat& eps, std::uint64_t seed) {
    if (t < 1) throw TooSmall("pattern size t must be at least 1");
    ExtractorParams p;
    p.block_size = std::max<std::size_t>(t < 16 ? std::size_t{1} << (2 * t) : kMaxVertices, 16);
    p.clique_target = std::min(10 * t, 2 * t + 2);
    p.sparse_threshold = eps * eps;
    p.blowup_margin = 1;
    p.max_rounds = 40;
    p.oracle_cap = 64;
    p.resample_limit = 200;
    p.slack_exponent = 2;
    p.seed = seed;
    p.validate();
    return p;
}

void ExtractorParams::validate() const {
    if (block_size < 1) throw PreconditionFailed("block_size >= 1");
    if (clique_target < 1) throw PreconditionFailed("clique_target >= 1");
    if (blowup_margin < 1) throw PreconditionFailed("blowup_margin >= 1");
    if (max_rounds < 1) throw PreconditionFailed("max_rounds >= 1");
    if (oracle_cap < 1 || oracle_cap > 64) throw PreconditionFailed("oracle_cap in 1..64");
    if (resample_limit < 1) throw PreconditionFailed("resample_limit >= 1");
    if (slack_exponent < 1) throw PreconditionFailed("slack_exponent >= 1");
    if (sparse_threshold <= 0 || sparse_threshold >= 1) {
        throw PreconditionFailed("sparse_threshold in (0, 1)");
    }
}

const std::array<const char*, 25> kTraceLabels = {
    "quick_probe",    "balanced_partition", "round_start",     "mint_block",
    "pair_scan",      "sparse_certificate", "dense_biclique",  "dense_unrealized",
    "growth_scan",    "final_count",        "oracle_probe",    "drc_red",
    "drc_blue",       "clique_extract",     "triple_chain",    "triple_direct",
    "claim_density",  "claim_blowup",       "dichotomy",       "absorb",
    "state_rescan",   "blowup_convert",     "assembly_failed", "iteration_bound",
    "outcome",
};

bool is_trace_label(std::string_view label) {
    for (const char* known : kTraceLabels) {
        if (label == known) return true;
    }
    return false;
}

void ExtractionTrace::add(const std::string& lemma, nlohmann::json sizes,
                          std::optional<Rat> density, std::string decision) {
    if (!is_trace_label(lemma)) throw UnavError("unknown trace label: " + lemma);
    steps.push_back(TraceStep{lemma, std::move(sizes), std::move(density), std::move(decision)});
}

nlohmann::json ExtractionTrace::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const TraceStep& s : steps) {
        nlohmann::json step;
        step["lemma"] = s.lemma;
        step["sizes"] = s.sizes;
        if (s.density) step["density"] = format_rat(*s.density);
        step["decision"] = s.decision;
        arr.push_back(std::move(step));
    }
    return nlohmann::json{{"steps", std::move(arr)}};
}

std::pair<VertexSet, VertexSet> balanced_partition(const GraphColoring& g, const Rat& eps,
                                                   const ExtractorParams& params) {
    params.validate();
    DegreeThreshold th = DegreeThreshold::linear(eps);
    if (!g.min_degree_ok(th)) {
        throw PreconditionFailed("minimum degree eps*n in both colors");
    }
    const std::size_t n = g.n();
    const Rat part_floor = rat_of(n) / 3;
    const Rat degree_floor = eps * rat_of(n) / 3;

    Rng rng(params.seed);
    std::size_t best_ok = 0;
    std::string best_failure = "no attempt recorded";

    for (std::size_t attempt = 0; attempt < params.resample_limit; ++attempt) {
        VertexSet x(n);
        VertexSet y(n);
        for (Vertex v = 0; v < n; ++v) {
            if (rng.bernoulli(Rat(1, 2))) {
                x.insert(v);
            } else {
                y.insert(v);
            }
        }

        std::size_t ok = 0;
        std::string failure;
        if (rat_of(x.size()) > part_floor) {
            ++ok;
        } else if (failure.empty()) {
            failure = "|X| = " + std::to_string(x.size()) + " not above n/3";
        }
        if (rat_of(y.size()) > part_floor) {
            ++ok;
        } else if (failure.empty()) {
            failure = "|Y| = " + std::to_string(y.size()) + " not above n/3";
        }
        for (Vertex v = 0; v < n; ++v) {
            for (Color c : {Color::Red, Color::Blue}) {
                for (const VertexSet* part : {&x, &y}) {
                    if (rat_of(g.degree(c, v, *part)) >= degree_floor) {
                        ++ok;
                    } else if (failure.empty()) {
                        failure = "vertex " + std::to_string(v) + " has " +
                                  std::to_string(g.degree(c, v, *part)) + " " + color_name(c) +
                                  " neighbors in " + (part == &x ? "X" : "Y") +
                                  ", needs >= " + format_rat(degree_floor);
                    }
                }
            }
        }
        if (failure.empty()) return {x, y};
        if (ok > best_ok) {
            best_ok = ok;
            best_failure = failure;
        }
    }
    throw ResampleExhausted("no balanced partition after " +
                            std::to_string(params.resample_limit) +
                            " attempts; best attempt satisfied " + std::to_string(best_ok) +
                            " of " + std::to_string(2 + 4 * n) +
                            " conditions; first unmet condition there: " + best_failure);
}

MonoClique ramsey_clique(const GraphColoring& g, const VertexSet& S, std::size_t t) {
    if (t < 1) throw TooSmall("clique size t must be at least 1");
    if (t >= 16 || rat_of(S.size()) < rat_of(std::size_t{1} << (2 * t))) {
        throw PreconditionFailed("pivot walk needs |S| >= 4^t");
    }
    VertexSet live = S;
    std::vector<std::pair<Vertex, Color>> pivots;
    while (!live.empty()) {
        Vertex p = live.first();
        live.erase(p);
        VertexSet red = live & g.red_neighbors(p);
        VertexSet blue = live - red;
        if (red.size() >= blue.size()) {
            pivots.emplace_back(p, Color::Red);
            live = red;
        } else {
            pivots.emplace_back(p, Color::Blue);
            live = blue;
        }
    }
    std::size_t reds = 0;
    for (const auto& [p, c] : pivots) {
        if (c == Color::Red) ++reds;
    }
    Color majority = reds >= pivots.size() - reds ? Color::Red : Color::Blue;
    VertexSet members(S.universe());
    for (const auto& [p, c] : pivots) {
        if (c == majority) members.insert(p);
        if (members.size() == t) break;
    }
    if (members.size() < t || !verify_mono_clique(g, majority, members)) {
        throw InvalidWitness("pivot walk failed to produce a monochromatic clique");
    }
    return MonoClique{majority, members};
}

KstResult kst_subset(const GraphColoring& g, const VertexSet& A, const VertexSet& B, Color color,
                     std::size_t k, const Rat& alpha) {
    if (k < 1) throw TooSmall("subset size k must be at least 1");
    if (alpha <= 0 || alpha > 1) throw PreconditionFailed("alpha in (0, 1]");
    if (alpha * rat_of(A.size()) < rat_of(k)) throw PreconditionFailed("|A| >= k/alpha");
    std::size_t cross = g.pair_count(color, A, B);
    if (rat_of(cross) < alpha * rat_of(A.size()) * rat_of(B.size())) {
        throw PreconditionFailed("pair_count(color, A, B) >= alpha*|A|*|B|");
    }

    // Greedy on the exact completion count: after choosing a prefix P with
    // common neighborhood N, the potential sum_{v in N} C(deg(v, pool), k-i)
    // counts (completion, common neighbor) pairs. Picking the vertex of
    // maximum score keeps the potential above its average, which telescopes
    // to |N_k| >= Phi_0 / C(|A|, k) >= (alpha/e)^k |B|.
    VertexSet pool = A;
    VertexSet common = B;
    VertexSet chosen(A.universe());
    for (std::size_t i = 0; i < k; ++i) {
        unsigned remaining = static_cast<unsigned>(k - i - 1);
        std::optional<Vertex> best;
        BigInt best_score = -1;
        for (Vertex a : pool) {
            VertexSet reach = common & g.neighbors(color, a);
            BigInt score = 0;
            for (Vertex v : reach) {
                std::size_t d = g.degree(color, v, pool);
                score += binomial(BigInt(d) - 1, remaining);
            }
            if (score > best_score) {
                best_score = score;
                best = a;
            }
        }
        if (!best) throw UnavError("kst greedy ran out of pool vertices");
        chosen.insert(*best);
        common &= g.neighbors(color, *best);
        pool.erase(*best);
    }

    BigInt floor = ceil_scaled_exp_ratio(alpha, static_cast<unsigned>(k), BigInt(B.size()));
    if (BigInt(common.size()) < floor) {
        throw UnavError("kst greedy fell below its certified common-neighborhood bound");
    }
    return KstResult{chosen, common};
}

RamseyKstResult ramsey_kst(const GraphColoring& g, const VertexSet& A, const VertexSet& B,
                           std::size_t k) {
    if (k < 1) throw TooSmall("subset size k must be at least 1");
    if (A.size() < 2 * k) throw PreconditionFailed("|A| >= 2k");
    std::size_t total = A.size() * B.size();
    std::size_t reds = g.pair_count(Color::Red, A, B);
    Color majority = 2 * reds >= total ? Color::Red : Color::Blue;

    KstResult base = kst_subset(g, A, B, majority, k, Rat(1, 2));
    RamseyKstResult out{base.s, majority, base.n, std::nullopt};

    Rat four_pow = rat_pow(Rat(4), static_cast<long>(k));
    if (int_at_least_scaled_e_pow(BigInt(B.size()), four_pow, static_cast<unsigned>(k))) {
        if (k < 16 && out.n.size() >= (std::size_t{1} << (2 * k))) {
            out.clique = ramsey_clique(g, out.n, k);
        } else {
            for (Color c : {Color::Red, Color::Blue}) {
                auto probe = find_mono_clique_within(g, c, k, out.n);
                if (probe.found()) {
                    out.clique = probe.witness;
                    break;
                }
            }
        }
    }
    return out;
}

namespace {

// One pass of the violating-subset census for drc_subset: counts, for every
// vertex of T, how many s-subsets of T it sits in whose common `color`
// neighborhood inside A has fewer than m members. Two sound prunes keep the
// enumeration shallow: a branch whose prefix-common intersected with the
// common neighborhood of every remaining candidate already has m members
// cannot produce a violation; a prefix whose common is already below m makes
// every completion violate, so those are counted in bulk with binomials.
struct ViolationCensus {
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;
};

ViolationCensus census_violations(const GraphColoring& g, const VertexSet& A, Color color,
                                  const std::vector<Vertex>& tvec, std::size_t m,
                                  std::size_t s) {
    const std::size_t len = tvec.size();
    ViolationCensus out;
    out.counts.assign(len, 0);
    if (len < s) return out;

    std::vector<VertexSet> suffix(len + 1, A);
    for (std::size_t i = len; i-- > 0;) {
        suffix[i] = suffix[i + 1] & g.neighbors(color, tvec[i]);
    }

    std::vector<std::size_t> prefix;
    auto descend = [&](auto&& self, std::size_t from, const VertexSet& common) -> void {
        std::size_t depth = prefix.size();
        if (common.size() < m) {
            // Every completion of this prefix violates.
            std::size_t tail = len - from;
            std::size_t need = s - depth;
            std::uint64_t all = binom64(tail, need);
            if (all == 0) return;
            out.total += all;
            for (std::size_t p : prefix) out.counts[p] += all;
            if (need > 0) {
                std::uint64_t each = binom64(tail - 1, need - 1);
                for (std::size_t i = from; i < len; ++i) out.counts[i] += each;
            }
            return;
        }
        if (depth == s) return;
        if (from < len && common.intersection_size(suffix[from]) >= m) return;
        for (std::size_t i = from; i + (s - depth) <= len; ++i) {
            prefix.push_back(i);
            self(self, i + 1, common & g.neighbors(color, tvec[i]));
            prefix.pop_back();
        }
    };
    descend(descend, 0, A);
    return out;
}

}  // namespace

VertexSet drc_subset(const GraphColoring& g, const VertexSet& A, const VertexSet& B, Color color,
                     std::size_t a, std::size_t m, std::size_t r, std::size_t s,
                     std::uint64_t seed, std::size_t max_attempts) {
    if (a < 1 || m < 1 || r < 1 || s < 1) throw TooSmall("drc parameters must be at least 1");
    if (max_attempts < 1) throw TooSmall("max_attempts must be at least 1");
    if (A.empty() || B.empty()) throw PreconditionFailed("drc sides must be non-empty");
    std::size_t cross = g.pair_count(color, A, B);
    Rat delta = rat_of(cross) / (rat_of(A.size()) * rat_of(B.size()));
    if (!drc_inequality_holds(delta, BigInt(B.size()), BigInt(A.size()),
                              static_cast<unsigned>(r), static_cast<unsigned>(s), BigInt(m),
                              BigInt(a))) {
        throw PreconditionFailed("|B|(delta/e)^r - |B|^s m^r / |A|^r >= a");
    }

    std::vector<Vertex> avec = A.to_vector();
    Rng rng(seed);
    std::size_t best = 0;
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        VertexSet t_set = B;
        for (std::size_t i = 0; i < r; ++i) {
            Vertex sample = avec[rng.below(avec.size())];
            t_set &= g.neighbors(color, sample);
        }
        while (t_set.size() >= a) {
            std::vector<Vertex> tvec = t_set.to_vector();
            ViolationCensus census = census_violations(g, A, color, tvec, m, s);
            if (census.total == 0) return t_set;
            std::size_t worst = 0;
            for (std::size_t i = 1; i < tvec.size(); ++i) {
                if (census.counts[i] > census.counts[worst]) worst = i;
            }
            t_set.erase(tvec[worst]);
        }
        best = std::max(best, t_set.size());
    }
    throw RetriesExhausted("no clean subset of size " + std::to_string(a) + " after " +
                           std::to_string(max_attempts) + " samples; largest surviving set had " +
                           std::to_string(best) + " vertices");
}

namespace {

// Best (r, floor) over r in 1..12 for the certified dependent-random-choice
// bound |B|(delta/E_HI)^r - |B|^s m^r / |A|^r, evaluated exactly.
std::pair<std::size_t, std::size_t> best_drc_floor(const Rat& delta, std::size_t size_a,
                                                   std::size_t size_b, std::size_t s,
                                                   std::size_t m) {
    std::size_t best_r = 0;
    std::size_t best_a = 0;
    if (size_a == 0 || size_b == 0 || delta <= 0) return {best_r, best_a};
    for (std::size_t r = 1; r <= 12; ++r) {
        Rat lhs = rat_of(size_b) * rat_pow(delta / euler_hi(), static_cast<long>(r)) -
                  rat_pow(rat_of(size_b), static_cast<long>(s)) *
                      rat_pow(rat_of(m) / rat_of(size_a), static_cast<long>(r));
        if (lhs <= 0) continue;
        BigInt fl = floor_rat(lhs);
        if (fl <= 0) continue;
        std::size_t cand = fl > BigInt(size_b) ? size_b : static_cast<std::size_t>(fl);
        if (cand > best_a) {
            best_a = cand;
            best_r = r;
        }
    }
    return {best_r, best_a};
}

}  // namespace

TripleResult lemma123_triple(const GraphColoring& g, const VertexSet& A, const VertexSet& B,
                             const VertexSet& C, const Rat& delta, std::size_t q,
                             const ExtractorParams& params) {
    params.validate();
    if (q < 1) throw TooSmall("clique size q must be at least 1");
    if (delta <= 0 || delta > 1) throw PreconditionFailed("delta in (0, 1]");
    if (A.intersects(B)) throw OverlappingSets("A and B overlap");
    if (B.intersects(C)) throw OverlappingSets("B and C overlap");
    std::size_t red_cross = g.pair_count(Color::Red, A, B);
    if (rat_of(red_cross) < delta * rat_of(A.size()) * rat_of(B.size())) {
        throw PreconditionFailed("pair_count(Red, A, B) >= delta*|A|*|B|");
    }
    Rat blue_floor = delta * rat_of(C.size());
    for (Vertex u : B) {
        if (rat_of(g.degree(Color::Blue, u, C)) < blue_floor) {
            throw PreconditionFailed("degree(Blue, u, C) >= delta*|C| for every u in B");
        }
    }

    ExtractionTrace trace;

    Rat red_density(0);
    if (!A.empty() && !B.empty()) {
        red_density = rat_of(red_cross) / (rat_of(A.size()) * rat_of(B.size()));
    }
    auto [r1, a1] = best_drc_floor(red_density, A.size(), B.size(), q, 1);
    trace.add("drc_red",
              {{"a", A.size()}, {"b", B.size()}, {"r", r1}, {"floor", a1}, {"target", q}},
              red_density, a1 >= q ? "ok" : "floor below q");
    if (a1 < q) throw StageFailed("drc_red");
    VertexSet b1 = drc_subset(g, A, B, Color::Red, a1, 1, r1, q,
                              derive_seed(params.seed, 0x123, 1));

    std::size_t blue_cross = g.pair_count(Color::Blue, C, b1);
    Rat blue_density(0);
    if (!C.empty() && !b1.empty()) {
        blue_density = rat_of(blue_cross) / (rat_of(C.size()) * rat_of(b1.size()));
    }
    auto [r2, a2] = best_drc_floor(blue_density, C.size(), b1.size(), q, 1);
    trace.add("drc_blue",
              {{"c", C.size()}, {"b1", b1.size()}, {"r", r2}, {"floor", a2}, {"target", q}},
              blue_density, a2 >= q ? "ok" : "floor below q");
    if (a2 < q) throw StageFailed("drc_blue");
    VertexSet b2 = drc_subset(g, C, b1, Color::Blue, a2, 1, r2, q,
                              derive_seed(params.seed, 0x123, 2));

    std::optional<MonoClique> clique;
    if (q < 16 && b2.size() >= (std::size_t{1} << (2 * q))) {
        clique = ramsey_clique(g, b2, q);
    } else {
        for (Color c : {Color::Red, Color::Blue}) {
            auto probe = find_mono_clique_within(g, c, q, b2);
            if (probe.found()) {
                clique = probe.witness;
                break;
            }
        }
    }
    trace.add("clique_extract", {{"b2", b2.size()}, {"q", q}}, std::nullopt,
              clique ? color_name(clique->color) : "none");
    if (!clique) throw StageFailed("clique_extract");

    VertexSet a_prime = g.common_neighbors(Color::Red, clique->members) & A;
    VertexSet c_prime = g.common_neighbors(Color::Blue, clique->members) & C;
    if (a_prime.empty() || c_prime.empty()) {
        throw UnavError("drc guarantee broke: clique lost its common neighbors");
    }
    return TripleResult{a_prime, *clique, c_prime, std::move(trace)};
}

std::variant<SparseCertificate, InducedBiclique> sparse_pair_or_biclique(
    const GraphColoring& g, const VertexSet& A, const VertexSet& B, std::size_t t,
    const Rat& threshold, Color color) {
    if (t < 1) throw TooSmall("pattern size t must be at least 1");
    if (A.intersects(B)) throw OverlappingSets("sides overlap");

    for (const auto& [side, name] : {std::pair{&A, "A"}, std::pair{&B, "B"}}) {
        auto probe = find_mono_clique_within(g, color, t, *side);
        if (probe.found()) {
            std::string ids;
            for (Vertex v : probe.witness->members) {
                ids += (ids.empty() ? "" : ",") + std::to_string(v);
            }
            throw PreconditionFailed("side " + std::string(name) + " contains a " +
                                     color_name(color) + " clique {" + ids + "}");
        }
        if (probe.status == SearchStatus::Unknown) {
            throw PreconditionFailed("side " + std::string(name) +
                                     " could not be certified clique-free within budget");
        }
    }

    std::uint64_t cross = g.pair_count(color, A, B);
    std::uint64_t total = static_cast<std::uint64_t>(A.size()) * B.size();
    Rat density(0);
    if (total != 0) density = Rat(cross) / Rat(total);
    if (density <= threshold) {
        return SparseCertificate{color, cross, total, density, threshold};
    }

    // Dense side: complete sided search, sides restricted to A and B. Budget
    // overruns surface as BudgetExhausted rather than a silent miss.
    Color inner = opposite(color);
    SearchBudget budget;
    budget.on_exhaust = OnExhaust::Error;
    BudgetGauge gauge(budget);
    std::optional<InducedBiclique> found;
    for_each_mono_clique(g, inner, t, A, gauge, [&](const VertexSet& s) {
        VertexSet zone = g.common_neighbors(color, s) & B;
        BudgetGauge inner_gauge(budget);
        for_each_mono_clique(g, inner, t, zone, inner_gauge, [&](const VertexSet& w) {
            found = InducedBiclique{color, s, w};
            return false;
        });
        return !found.has_value();
    });
    if (found) {
        if (!verify_induced_biclique(g, found->color, found->side_a, found->side_b)) {
            throw InvalidWitness("sided search produced a non-verifying biclique");
        }
        return *found;
    }
    throw StageFailed("dense_unrealized");
}

LocalPattern blowup_to_pattern(const GraphColoring& g, const AltBlowup& w, std::size_t t,
                               const ExtractorParams& params) {
    params.validate();
    if (t < 1) throw TooSmall("pattern size t must be at least 1");
    bool ok = false;
    try {
        ok = verify_alt_blowup(g, w.classes[0], w.classes[1], w.classes[2], w.classes[3]);
    } catch (const UnavError& e) {
        throw InvalidWitness(std::string("blowup does not verify: ") + e.what());
    }
    if (!ok) throw InvalidWitness("blowup does not verify");

    VertexSet all = w.classes[0] | w.classes[1] | w.classes[2] | w.classes[3];
    for (const VertexSet& cls : w.classes) {
        if (cls.size() < params.blowup_margin * t) {
            throw MarginTooSmall("class size " + std::to_string(cls.size()) +
                                 " below margin*t = " +
                                 std::to_string(params.blowup_margin * t));
        }
    }
    if (all.size() > params.oracle_cap) {
        throw MarginTooSmall("blowup spans " + std::to_string(all.size()) +
                             " vertices, above the oracle cap " +
                             std::to_string(params.oracle_cap));
    }

    auto [sub, ids] = g.induced(all);
    auto probe = find_local_pattern(sub, t);
    if (probe.found()) {
        LocalPattern mapped = map_back(*probe.witness, ids, g.n());
        if (!verify_local_pattern(g, mapped, t)) {
            throw InvalidWitness("mapped local pattern does not verify");
        }
        return mapped;
    }
    if (probe.status == SearchStatus::None) {
        throw MarginTooSmall("bounded search certifies no size-" + std::to_string(t) +
                             " pattern inside the blowup at this margin");
    }
    throw MarginTooSmall("search budget exhausted inside the blowup");
}

namespace detail {

std::optional<AltBlowup> arrange_blowup(const GraphColoring& g,
                                        const std::array<VertexSet, 4>& classes) {
    std::size_t sz = classes[0].size();
    if (sz == 0) return std::nullopt;
    for (std::size_t i = 0; i < 4; ++i) {
        if (classes[i].size() != sz) return std::nullopt;
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (classes[i].intersects(classes[j])) return std::nullopt;
        }
    }
    static constexpr std::array<std::array<std::size_t, 4>, 8> kOrders = {{
        {0, 1, 2, 3},
        {1, 2, 3, 0},
        {2, 3, 0, 1},
        {3, 0, 1, 2},
        {0, 3, 2, 1},
        {3, 2, 1, 0},
        {2, 1, 0, 3},
        {1, 0, 3, 2},
    }};
    for (const auto& ord : kOrders) {
        if (verify_alt_blowup(g, classes[ord[0]], classes[ord[1]], classes[ord[2]],
                              classes[ord[3]])) {
            return AltBlowup{
                {classes[ord[0]], classes[ord[1]], classes[ord[2]], classes[ord[3]]}};
        }
    }
    return std::nullopt;
}

std::optional<AltBlowup> assemble_blowup_chain(const GraphColoring& g, const ChainInputs& in,
                                               std::size_t t, const ExtractorParams& params,
                                               ExtractionTrace& trace) {
    params.validate();
    if (t < 1) throw TooSmall("pattern size t must be at least 1");
    Color att = in.attach_color;
    Color opp = opposite(att);

    auto fail = [&](const std::string& why, nlohmann::json sizes) -> std::optional<AltBlowup> {
        trace.add("assembly_failed", std::move(sizes), std::nullopt, why);
        return std::nullopt;
    };

    if (in.attach_clique.size() < t) {
        return fail("attach clique smaller than t", {{"attach", in.attach_clique.size()}});
    }
    if (in.kst_clique.members.size() < 2 * t) {
        return fail("kst host smaller than 2t", {{"kst", in.kst_clique.members.size()}});
    }

    VertexSet u_pool = in.u_pool - in.kst_clique.members;
    if (in.mono_pool.intersects(in.attach_clique) ||
        in.mono_pool.intersects(in.kst_clique.members) || in.mono_pool.intersects(u_pool) ||
        in.attach_clique.intersects(in.kst_clique.members) ||
        in.attach_clique.intersects(u_pool)) {
        return fail("input pools overlap", {{"mono", in.mono_pool.size()},
                                            {"attach", in.attach_clique.size()},
                                            {"kst", in.kst_clique.members.size()},
                                            {"u", u_pool.size()}});
    }

    VertexSet attached(u_pool.universe());
    for (Vertex u : u_pool) {
        if (g.degree(att, u, in.attach_clique) >= t) attached.insert(u);
    }
    if (attached.size() < t) {
        return fail("too few pool vertices attach to the clique",
                    {{"u", u_pool.size()}, {"attached", attached.size()}});
    }

    std::size_t candidates = 0;
    std::optional<AltBlowup> result;
    BudgetGauge gauge{SearchBudget{}};
    for_each_homogeneous_clique(g, t, in.mono_pool, gauge, [&](const VertexSet& cq) {
        ++candidates;
        VertexSet w = g.common_neighbors(opp, cq) & attached;
        if (w.size() < t) return true;

        // Pigeonhole the pool by the lexicographically-first t attach-color
        // neighbors inside the clique, so the winning class shares one
        // complete attachment target.
        std::map<std::vector<Vertex>, std::vector<Vertex>> groups;
        for (Vertex u : w) {
            VertexSet reach = g.neighbors(att, u) & in.attach_clique;
            std::vector<Vertex> key = first_k(reach, t).to_vector();
            groups[key].push_back(u);
        }
        const std::vector<Vertex>* best_key = nullptr;
        const std::vector<Vertex>* best_members = nullptr;
        for (const auto& [key, members] : groups) {
            if (!best_members || members.size() > best_members->size()) {
                best_key = &key;
                best_members = &members;
            }
        }
        if (!best_members || best_members->size() < t) return true;
        VertexSet w_class(g.n(), *best_members);
        VertexSet k_sub(g.n(), *best_key);

        RamseyKstResult kst = ramsey_kst(g, in.kst_clique.members, w_class, t);

        VertexSet u_final(g.n());
        if (kst.clique && kst.clique->members.size() == t) {
            u_final = kst.clique->members;
        } else if (auto hom = first_homogeneous_clique(g, t, kst.n)) {
            u_final = *hom;
        } else {
            return true;
        }

        result = arrange_blowup(g, {cq, u_final, k_sub, kst.s});
        return !result.has_value();
    });

    if (!result) {
        return fail("no candidate clique closed the cycle",
                    {{"candidates", candidates}, {"mono", in.mono_pool.size()}});
    }
    return result;
}

}  // namespace detail

ExtractOutcome<InducedBiclique> extract_theorem1(const GraphColoring& g, const Rat& eps,
                                                 std::size_t t, const ExtractorParams& params) {
    params.validate();
    if (t < 1) throw TooSmall("pattern size t must be at least 1");
    DegreeThreshold th = DegreeThreshold::quarter_plus(eps);
    if (!g.min_degree_ok(th)) {
        throw PreconditionFailed("minimum degree n/4 + eps*n in both colors");
    }

    const std::size_t n = g.n();
    ExtractOutcome<InducedBiclique> out;
    ExtractionTrace& trace = out.trace;

    struct Block {
        Color family;
        VertexSet members;
    };
    std::vector<Block> blocks;
    VertexSet zone = g.vertices();

    auto finish = [&](InducedBiclique w, const char* how) {
        if (!verify_induced_biclique(g, w.color, w.side_a, w.side_b)) {
            throw InvalidWitness("pipeline produced a non-verifying biclique");
        }
        trace.add("outcome", {{"n", n}}, std::nullopt, std::string("witness via ") + how);
        out.witness = std::move(w);
    };

    struct MintOut {
        std::optional<InducedBiclique> witness;
        std::optional<VertexSet> block;
    };
    // A block is minted inside the opposite-color common neighborhood of
    // some gamma clique of the pool: either the bounded search certifies the
    // prefix gamma-clique-free (block for family gamma) or it exposes a
    // gamma clique there, which closes an induced biclique on the spot. A
    // pool with no gamma clique at all is itself certified, so its prefix
    // inside the zone serves directly.
    auto mint = [&](Color gamma, const VertexSet& pool) -> MintOut {
        MintOut res;
        bool any_clique = false;
        BudgetGauge gauge{SearchBudget{}};
        bool complete = for_each_mono_clique(g, gamma, t, pool, gauge, [&](const VertexSet& k) {
            any_clique = true;
            VertexSet host = g.common_neighbors(opposite(gamma), k) & zone;
            if (host.size() < params.block_size) return true;
            VertexSet b0 = first_k(host, params.block_size);
            auto probe = find_mono_clique_within(g, gamma, t, b0);
            if (probe.found()) {
                res.witness = InducedBiclique{opposite(gamma), k, probe.witness->members};
                return false;
            }
            if (probe.status == SearchStatus::None) {
                res.block = b0;
                return false;
            }
            return true;
        });
        if (!res.witness && !res.block && complete && !any_clique) {
            VertexSet fallback = pool & zone;
            if (fallback.size() >= params.block_size) {
                res.block = first_k(fallback, params.block_size);
            }
        }
        return res;
    };

    // Scans a freshly added block against every earlier block of the same
    // family; a dense pair must realize an induced biclique or the round is
    // logged as a desk-scale gap.
    auto scan_new = [&](std::size_t idx) -> std::optional<InducedBiclique> {
        for (std::size_t j = 0; j < idx; ++j) {
            if (blocks[j].family != blocks[idx].family) continue;
            trace.add("pair_scan",
                      {{"i", j}, {"j", idx}, {"size_i", blocks[j].members.size()},
                       {"size_j", blocks[idx].members.size()}},
                      std::nullopt, color_name(blocks[idx].family));
            try {
                auto res = sparse_pair_or_biclique(g, blocks[j].members, blocks[idx].members, t,
                                                   params.sparse_threshold,
                                                   blocks[idx].family);
                if (std::holds_alternative<InducedBiclique>(res)) {
                    const auto& w = std::get<InducedBiclique>(res);
                    trace.add("dense_biclique",
                              {{"side_a", w.side_a.size()}, {"side_b", w.side_b.size()}},
                              std::nullopt, color_name(w.color));
                    return w;
                }
                const auto& cert = std::get<SparseCertificate>(res);
                trace.add("sparse_certificate",
                          {{"cross", cert.cross_count}, {"pairs", cert.total_pairs}},
                          cert.density, "below threshold");
            } catch (const StageFailed&) {
                trace.add("dense_unrealized",
                          {{"i", j}, {"j", idx}}, std::nullopt,
                          "dense pair, sided search empty at this scale");
            } catch (const PreconditionFailed& e) {
                trace.add("pair_scan", {{"i", j}, {"j", idx}}, std::nullopt,
                          std::string("uncertifiable: ") + e.what());
            }
        }
        return std::nullopt;
    };

    auto add_block = [&](Color family, VertexSet members) -> std::optional<InducedBiclique> {
        zone -= members;
        blocks.push_back(Block{family, std::move(members)});
        trace.add("mint_block",
                  {{"family_blocks", blocks.size()}, {"size", blocks.back().members.size()},
                   {"zone", zone.size()}},
                  std::nullopt, color_name(family));
        return scan_new(blocks.size() - 1);
    };

    // Seed one block per family.
    for (Color gamma : {Color::Red, Color::Blue}) {
        const VertexSet pool = (gamma == Color::Blue && !blocks.empty())
                                   ? blocks.front().members
                                   : g.vertices();
        MintOut m = mint(gamma, pool);
        if (m.witness) {
            finish(std::move(*m.witness), "mint_block");
            return out;
        }
        if (m.block) {
            if (auto w = add_block(gamma, std::move(*m.block))) {
                finish(std::move(*w), "pair_scan");
                return out;
            }
        } else {
            trace.add("mint_block", {{"pool", pool.size()}, {"zone", zone.size()}},
                      std::nullopt, std::string(color_name(gamma)) + " seed failed");
        }
    }

    const std::size_t max_blocks = n / std::max<std::size_t>(params.block_size, 1) + 2;
    const Rat zone_floor = eps * eps * rat_of(n);
    std::size_t round = 0;
    while (rat_of(zone.size()) >= zone_floor) {
        if (round >= params.max_rounds || blocks.size() >= max_blocks) {
            trace.add("iteration_bound", {{"round", round}, {"blocks", blocks.size()}},
                      std::nullopt, round >= params.max_rounds ? "rounds" : "blocks");
            break;
        }
        ++round;
        trace.add("round_start", {{"round", round}, {"zone", zone.size()},
                                  {"blocks", blocks.size()}},
                  std::nullopt, "grow");

        bool advanced = false;
        for (std::size_t i = 0; i < blocks.size() && !advanced; ++i) {
            Color family = blocks[i].family;
            std::size_t cross = g.pair_count(family, blocks[i].members, zone);
            Rat need = eps * rat_of(blocks[i].members.size()) * rat_of(n) / 2;
            if (rat_of(cross) < need) continue;
            trace.add("growth_scan", {{"donor", i}, {"edges", cross}}, std::nullopt,
                      "donor dense into zone");
            MintOut m = mint(opposite(family), blocks[i].members);
            if (m.witness) {
                finish(std::move(*m.witness), "mint_block");
                return out;
            }
            if (m.block) {
                if (auto w = add_block(opposite(family), std::move(*m.block))) {
                    finish(std::move(*w), "pair_scan");
                    return out;
                }
                advanced = true;
            } else {
                trace.add("mint_block", {{"donor", i}}, std::nullopt, "mint failed");
            }
        }
        if (!advanced) {
            trace.add("growth_scan", {{"blocks", blocks.size()}, {"zone", zone.size()}},
                      std::nullopt, "no donor produced a block");
            break;
        }
    }

    VertexSet red_union(n);
    VertexSet blue_union(n);
    for (const Block& b : blocks) {
        (b.family == Color::Red ? red_union : blue_union) |= b.members;
    }
    for (const auto& [name, color, own, other] :
         {std::tuple{"red", Color::Red, &red_union, &blue_union},
          std::tuple{"blue", Color::Blue, &blue_union, &red_union}}) {
        std::size_t count =
            own->empty() || other->empty() ? 0 : g.pair_count(color, *own, *other);
        Rat bound = rat_of(n) * rat_of(own->size()) / 4;
        trace.add("final_count",
                  {{"family", name}, {"cross", count}, {"own", own->size()},
                   {"other", other->size()}},
                  std::nullopt,
                  rat_of(count) >= bound ? "meets n|X|/4" : "below n|X|/4");
    }

    if (n <= params.oracle_cap && 2 * t <= n) {
        for (Color c : {Color::Red, Color::Blue}) {
            auto probe = find_induced_biclique(g, c, t);
            trace.add("oracle_probe", {{"n", n}, {"t", t}}, std::nullopt,
                      std::string(color_name(c)) + (probe.found() ? " found" : " none"));
            if (probe.found()) {
                finish(std::move(*probe.witness), "oracle_probe");
                return out;
            }
        }
    }

    trace.add("outcome",
              {{"blocks", blocks.size()}, {"zone", zone.size()}, {"rounds", round}},
              std::nullopt, "failure");
    out.failure = FailureReport{
        "block refinement exhausted without realizing an induced biclique at this scale",
        {{"n", n},
         {"red_blocks", red_union.size()},
         {"blue_blocks", blue_union.size()},
         {"residual", zone.size()},
         {"rounds", round}}};
    return out;
}

ExtractOutcome<LocalPattern> extract_theorem2(const GraphColoring& g, const Rat& eps,
                                              std::size_t t, const ExtractorParams& params) {
    params.validate();
    if (t < 1) throw TooSmall("pattern size t must be at least 1");
    DegreeThreshold th = DegreeThreshold::linear(eps);
    if (!g.min_degree_ok(th)) {
        throw PreconditionFailed("minimum degree eps*n in both colors");
    }

    const std::size_t n = g.n();
    ExtractOutcome<LocalPattern> out;
    ExtractionTrace& trace = out.trace;

    auto finish = [&](LocalPattern w, const char* how) {
        if (!verify_local_pattern(g, w, t)) {
            throw InvalidWitness("pipeline produced a non-verifying local pattern");
        }
        trace.add("outcome", {{"n", n}}, std::nullopt, std::string("witness via ") + how);
        out.witness = std::move(w);
    };
    auto fail = [&](std::string reason, nlohmann::json sizes) {
        trace.add("outcome", {{"n", n}}, std::nullopt, "failure");
        out.failure = FailureReport{std::move(reason), std::move(sizes)};
    };

    if (2 * t > n) {
        trace.add("quick_probe", {{"n", n}, {"t", t}}, std::nullopt, "pattern cannot fit");
        fail("no size-" + std::to_string(t) + " pattern fits in " + std::to_string(n) +
                 " vertices",
             {{"n", n}, {"t", t}});
        return out;
    }
    if (n <= params.oracle_cap) {
        auto probe = find_local_pattern(g, t);
        trace.add("quick_probe", {{"n", n}, {"t", t}}, std::nullopt,
                  probe.found()  ? "found"
                  : probe.status == SearchStatus::None ? "none"
                                                       : "unknown");
        if (probe.found()) {
            finish(std::move(*probe.witness), "quick_probe");
            return out;
        }
        if (probe.status == SearchStatus::None) {
            fail("bounded search certifies no size-" + std::to_string(t) + " local pattern",
                 {{"n", n}, {"t", t}});
            return out;
        }
    }

    auto [x, y] = balanced_partition(g, eps, params);
    trace.add("balanced_partition", {{"x", x.size()}, {"y", y.size()}}, std::nullopt, "ok");

    VertexSet x1(n);
    VertexSet y1(n);
    VertexSet x2 = x;
    VertexSet y2 = y;
    std::size_t i_exp = 0;
    const std::size_t i_cap = static_cast<std::size_t>(std::ceil(
        4.0 * std::log(static_cast<double>(numerator(eps)) /
                       static_cast<double>(denominator(eps))) /
        std::log(0.9)));
    const Rat slack = rat_pow(eps, static_cast<long>(params.slack_exponent));
    const GraphColoring swapped = g.color_swapped();

    bool bound_hit = false;
    std::size_t round = 0;
    std::string stall = "refinement stalled";
    while (true) {
        if (round >= params.max_rounds || i_exp > i_cap) {
            trace.add("iteration_bound", {{"round", round}, {"i", i_exp}}, std::nullopt,
                      round >= params.max_rounds ? "rounds" : "exponent");
            bound_hit = true;
            break;
        }
        ++round;

        VertexSet x_free = x - x1;
        VertexSet y_free = y - y1;
        if (x_free.empty() || y_free.empty()) {
            stall = "one side fully absorbed";
            trace.add("round_start", {{"round", round}, {"x_free", x_free.size()},
                                      {"y_free", y_free.size()}},
                      std::nullopt, "degenerate");
            break;
        }
        std::size_t free_pairs = x_free.size() * y_free.size();
        std::size_t red_cross = g.pair_count(Color::Red, x_free, y_free);
        Color c_star = 2 * red_cross >= free_pairs ? Color::Red : Color::Blue;
        Color c_r = c_star;
        Color c_b = opposite(c_star);
        trace.add("round_start",
                  {{"round", round}, {"i", i_exp}, {"x_free", x_free.size()},
                   {"y_free", y_free.size()}},
                  rat_of(red_cross) / rat_of(free_pairs), color_name(c_star));

        const bool red_round = c_star == Color::Red;
        const VertexSet& p_side = red_round ? x : y;
        VertexSet& p1 = red_round ? x1 : y1;
        VertexSet& q1 = red_round ? y1 : x1;
        const VertexSet& p2 = red_round ? x2 : y2;
        const VertexSet& q_side = red_round ? y : x;
        VertexSet p_free = p_side - p1;
        VertexSet q_free = q_side - q1;

        // High attach-degree vertices exist because c_star holds at least
        // half the free pairs.
        Rat quarter = rat_of(q_free.size()) / 4;
        VertexSet x_prime(n);
        for (Vertex v : p_free) {
            if (rat_of(g.degree(c_r, v, q_free)) >= quarter) x_prime.insert(v);
        }
        if (x_prime.empty()) {
            stall = "no vertex reaches quarter degree into the free side";
            break;
        }

        // First chain: the partition degrees feed the lemma with the colors
        // arranged so the dense pair is in c_b; run it on the coloring whose
        // red matches that.
        const GraphColoring& g1 = red_round ? swapped : g;
        ExtractorParams round_params = params;
        round_params.seed = derive_seed(params.seed, round, 1);

        VertexSet a0(n);
        VertexSet c0(n);
        std::optional<MonoClique> b_cl;
        try {
            TripleResult tr = lemma123_triple(g1, x_prime, q_side, p_side, eps / 3,
                                              params.clique_target, round_params);
            append_trace(trace, tr.trace);
            a0 = tr.a_prime;
            c0 = tr.c_prime;
            Color b_color = red_round ? opposite(tr.b_clique.color) : tr.b_clique.color;
            b_cl = MonoClique{b_color, tr.b_clique.members};
            trace.add("triple_chain",
                      {{"a", a0.size()}, {"b", b_cl->members.size()}, {"c", c0.size()}},
                      std::nullopt, "ok");
        } catch (const UnavError& e) {
            trace.add("triple_chain", {{"x_prime", x_prime.size()}, {"q", q_side.size()}},
                      std::nullopt, std::string("failed: ") + e.what());
        }
        if (!b_cl) {
            // Direct fallback: find any monochromatic clique in Q whose
            // common neighborhoods on both colors reach the two pools.
            for (std::size_t q_try = params.clique_target; q_try + 1 > 2 * t && !b_cl;
                 --q_try) {
                BudgetGauge gauge{SearchBudget{}};
                for_each_homogeneous_clique(g, q_try, q_side, gauge, [&](const VertexSet& k) {
                    VertexSet cand_a = g.common_neighbors(c_b, k) & x_prime;
                    if (cand_a.empty()) return true;
                    VertexSet cand_c = g.common_neighbors(c_r, k) & p_side;
                    if (cand_c.empty()) return true;
                    a0 = cand_a;
                    c0 = cand_c;
                    b_cl = MonoClique{clique_color(g, k), k};
                    return false;
                });
                if (q_try == 0) break;
            }
            trace.add("triple_direct", {{"q", q_side.size()}}, std::nullopt,
                      b_cl ? "ok" : "no clique with both pools");
            if (!b_cl) {
                stall = "no chain clique available in the attach side";
                break;
            }
        }

        std::optional<MonoClique> a_cl =
            extract_mono_clique(g, a0, t, std::min(params.clique_target, a0.size()));
        trace.add("clique_extract", {{"a0", a0.size()}}, std::nullopt,
                  a_cl ? std::string(color_name(a_cl->color)) + " size " +
                             std::to_string(a_cl->members.size())
                       : "none");
        if (!a_cl) {
            stall = "no monochromatic clique inside the attached pool";
            break;
        }

        std::size_t u_need = std::max<std::size_t>(1, (a_cl->members.size() + 7) / 8);
        VertexSet u_set(n);
        for (Vertex u : q_free) {
            if (g.degree(c_r, u, a_cl->members) >= u_need) u_set.insert(u);
        }

        std::size_t claim_pairs = c0.size() * u_set.size();
        std::size_t claim_cross = claim_pairs == 0 ? 0 : g.pair_count(c_b, c0, u_set);
        bool claim_dense =
            claim_pairs > 0 && rat_of(claim_cross) > slack / 2 * rat_of(claim_pairs);
        trace.add("claim_density", {{"c0", c0.size()}, {"u", u_set.size()}},
                  claim_pairs == 0 ? std::optional<Rat>{}
                                   : std::optional<Rat>{rat_of(claim_cross) /
                                                        rat_of(claim_pairs)},
                  claim_dense ? "dense" : "sparse");
        if (claim_dense) {
            detail::ChainInputs inputs{c0, a_cl->members, *b_cl, u_set, c_r};
            auto blowup = detail::assemble_blowup_chain(g, inputs, t, params, trace);
            if (blowup) {
                trace.add("claim_blowup",
                          {{"class", blowup->classes[0].size()}}, std::nullopt, "assembled");
                ExtractorParams convert = params;
                convert.blowup_margin = 1;
                try {
                    LocalPattern lp = blowup_to_pattern(g, *blowup, t, convert);
                    trace.add("blowup_convert", {{"span", 4 * t}}, std::nullopt, "converted");
                    finish(std::move(lp), "claim_blowup");
                    return out;
                } catch (const MarginTooSmall& e) {
                    trace.add("blowup_convert", {{"span", 4 * t}}, std::nullopt,
                              std::string("failed: ") + e.what());
                }
            }
        }

        VertexSet v_set(n);
        for (Vertex v : c0) {
            if (rat_of(g.degree(c_b, v, u_set)) <= slack * rat_of(u_set.size())) {
                v_set.insert(v);
            }
        }

        Rat pow10 = rat_pow(Rat(10), static_cast<long>(i_exp));
        Rat dich = Rat(4) * pow10 * slack;
        std::size_t u_p2 = u_set.empty() || p2.empty() ? 0 : g.pair_count(c_b, u_set, p2);
        bool absorb_u = rat_of(u_p2) <= dich * rat_of(u_set.size()) * rat_of(p2.size());
        if (absorb_u) {
            trace.add("dichotomy", {{"u", u_set.size()}, {"p2", p2.size()}},
                      std::nullopt, "absorb_u");
            q1 |= u_set;
            trace.add("absorb", {{"q1", q1.size()}}, std::nullopt,
                      red_round ? "u into y1" : "u into x1");
        } else {
            VertexSet v_new = v_set - p1;
            std::size_t q1_v = q1.empty() || v_new.empty() ? 0 : g.pair_count(c_b, q1, v_new);
            bool absorb_v = rat_of(q1_v) <= dich * rat_of(q1.size()) * rat_of(v_new.size());
            if (absorb_v) {
                trace.add("dichotomy", {{"q1", q1.size()}, {"v", v_new.size()}},
                          std::nullopt, "absorb_v");
                p1 |= v_new;
                trace.add("absorb", {{"p1", p1.size()}}, std::nullopt,
                          red_round ? "v into x1" : "v into y1");
            } else {
                trace.add("dichotomy", {{"u", u_set.size()}, {"v", v_set.size()}},
                          std::nullopt, "both_dense");
                // Second chain from the dense leftovers; the lemma's red must
                // match the attach color here.
                Rat rise = Rat(2) * pow10 * slack;
                VertexSet x2p(n);
                for (Vertex v : p2) {
                    if (rat_of(g.degree(c_b, v, u_set)) >= rise * rat_of(u_set.size())) {
                        x2p.insert(v);
                    }
                }
                VertexSet y1p(n);
                for (Vertex u : q1) {
                    if (rat_of(g.degree(c_b, u, v_set)) >= rise * rat_of(v_set.size())) {
                        y1p.insert(u);
                    }
                }
                const GraphColoring& g2 = red_round ? g : swapped;
                ExtractorParams second_params = params;
                second_params.seed = derive_seed(params.seed, round, 2);
                std::optional<MonoClique> b2_cl;
                VertexSet a2(n);
                VertexSet c2(n);
                try {
                    TripleResult tr2 = lemma123_triple(g2, x2p, y1p, v_set, slack,
                                                       params.clique_target, second_params);
                    append_trace(trace, tr2.trace);
                    a2 = tr2.a_prime;
                    c2 = tr2.c_prime;
                    Color b_color =
                        red_round ? tr2.b_clique.color : opposite(tr2.b_clique.color);
                    b2_cl = MonoClique{b_color, tr2.b_clique.members};
                    trace.add("triple_chain",
                              {{"a", a2.size()}, {"b", b2_cl->members.size()},
                               {"c", c2.size()}},
                              std::nullopt, "ok");
                } catch (const UnavError& e) {
                    trace.add("triple_chain",
                              {{"x2p", x2p.size()}, {"y1p", y1p.size()}, {"v", v_set.size()}},
                              std::nullopt, std::string("failed: ") + e.what());
                }
                if (b2_cl) {
                    std::optional<MonoClique> c_cl = extract_mono_clique(
                        g, c2, t, std::min(params.clique_target, c2.size()));
                    trace.add("clique_extract", {{"c2", c2.size()}}, std::nullopt,
                              c_cl ? std::string(color_name(c_cl->color)) + " size " +
                                         std::to_string(c_cl->members.size())
                                   : "none");
                    if (c_cl) {
                        detail::ChainInputs inputs{a2, c_cl->members, *b2_cl, u_set, c_r};
                        auto blowup =
                            detail::assemble_blowup_chain(g, inputs, t, params, trace);
                        if (blowup) {
                            ExtractorParams convert = params;
                            convert.blowup_margin = 1;
                            try {
                                LocalPattern lp = blowup_to_pattern(g, *blowup, t, convert);
                                trace.add("blowup_convert", {{"span", 4 * t}}, std::nullopt,
                                          "converted");
                                finish(std::move(lp), "dichotomy");
                                return out;
                            } catch (const MarginTooSmall& e) {
                                trace.add("blowup_convert", {{"span", 4 * t}}, std::nullopt,
                                          std::string("failed: ") + e.what());
                            }
                        }
                    }
                }
                stall = "both dichotomy densities high but no blowup assembled";
                break;
            }
        }

        // Re-derive the attachment sets against the grown absorbed sets; the
        // loosened exponent keeps every retained vertex above the bound.
        ++i_exp;
        Rat keep = Rat(1) - rat_pow(Rat(10), static_cast<long>(i_exp)) * slack;
        x2 = VertexSet(n);
        for (Vertex v : x) {
            if (rat_of(g.degree(Color::Red, v, y1)) >= keep * rat_of(y1.size())) {
                x2.insert(v);
            }
        }
        y2 = VertexSet(n);
        for (Vertex u : y) {
            if (rat_of(g.degree(Color::Blue, u, x1)) >= keep * rat_of(x1.size())) {
                y2.insert(u);
            }
        }
        VertexSet xf = x - x1;
        VertexSet yf = y - y1;
        trace.add("state_rescan",
                  {{"x2", x2.size()}, {"y2", y2.size()}, {"i", i_exp}},
                  rat_of(xf.size() * yf.size()) / rat_of(n * n), "ok");
    }

    std::size_t span = std::min(n, params.oracle_cap);
    if (2 * t <= span) {
        auto [sub, ids] = g.induced(first_k(g.vertices(), span));
        auto probe = find_local_pattern(sub, t);
        trace.add("oracle_probe", {{"span", span}, {"t", t}}, std::nullopt,
                  probe.found()  ? "found"
                  : probe.status == SearchStatus::None ? "none"
                                                       : "unknown");
        if (probe.found()) {
            finish(map_back(*probe.witness, ids, n), "oracle_probe");
            return out;
        }
    }

    fail(bound_hit ? "round budget exhausted before a blowup was assembled" : stall,
         {{"n", n},
          {"x", x.size()},
          {"y", y.size()},
          {"x1", x1.size()},
          {"y1", y1.size()},
          {"x2", x2.size()},
          {"y2", y2.size()},
          {"rounds", round},
          {"i", i_exp}});
    return out;
}

}  // namespace unav
