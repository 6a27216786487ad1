#include "unav/witness.hpp"

#include "unav/errors.hpp"

#include <cstddef>

namespace unav {

namespace {

void check_in_graph(const GraphColoring& g, const VertexSet& S, const char* name) {
    if (S.universe() != g.n()) {
        throw SizeMismatch(std::string(name) + ": set universe " +
                           std::to_string(S.universe()) + " != vertex count " +
                           std::to_string(g.n()));
    }
}

void check_disjoint(const VertexSet& a, const VertexSet& b, const char* what) {
    if (a.intersects(b)) throw OverlappingSets(what);
}

// True iff all pairs inside S have the color, with S already validated.
bool all_within(const GraphColoring& g, Color c, const VertexSet& S) {
    return g.pair_count_within(opposite(c), S) == 0;
}

// True iff all cross pairs A-B have the color.
bool all_cross(const GraphColoring& g, Color c, const VertexSet& A, const VertexSet& B) {
    return g.pair_count(opposite(c), A, B) == 0;
}

}  // namespace

bool verify_mono_clique(const GraphColoring& g, Color color, const VertexSet& S) {
    check_in_graph(g, S, "mono clique");
    if (S.empty()) throw TooSmall("mono clique needs at least one vertex");
    return all_within(g, color, S);
}

bool verify_induced_biclique(const GraphColoring& g, Color color, const VertexSet& A,
                             const VertexSet& B) {
    check_in_graph(g, A, "biclique side A");
    check_in_graph(g, B, "biclique side B");
    check_disjoint(A, B, "biclique sides overlap");
    if (A.size() != B.size()) throw SizeMismatch("biclique sides differ in size");
    if (A.empty()) throw SizeMismatch("biclique sides must be non-empty");
    return all_cross(g, color, A, B) && all_within(g, opposite(color), A) &&
           all_within(g, opposite(color), B);
}

bool verify_p_pattern(const GraphColoring& g, const VertexSet& V1, const VertexSet& V2,
                      const VertexSet& V3, const VertexSet& V4) {
    const VertexSet* parts[4] = {&V1, &V2, &V3, &V4};
    std::size_t t = V1.size();
    for (int i = 0; i < 4; ++i) {
        check_in_graph(g, *parts[i], "P-pattern part");
        if (parts[i]->size() != t) throw SizeMismatch("P-pattern parts differ in size");
        for (int j = i + 1; j < 4; ++j) {
            check_disjoint(*parts[i], *parts[j], "P-pattern parts overlap");
        }
    }
    if (t == 0) throw SizeMismatch("P-pattern parts must be non-empty");
    return all_within(g, Color::Red, V1 | V2) && all_within(g, Color::Blue, V3 | V4) &&
           all_cross(g, Color::Red, V1, V3) && all_cross(g, Color::Red, V2, V4) &&
           all_cross(g, Color::Blue, V1, V4) && all_cross(g, Color::Blue, V2, V3);
}

bool verify_alt_blowup(const GraphColoring& g, const VertexSet& A0, const VertexSet& A1,
                       const VertexSet& A2, const VertexSet& A3) {
    const VertexSet* cls[4] = {&A0, &A1, &A2, &A3};
    std::size_t t = A0.size();
    for (int i = 0; i < 4; ++i) {
        check_in_graph(g, *cls[i], "blowup class");
        if (cls[i]->size() != t) throw SizeMismatch("blowup classes differ in size");
        for (int j = i + 1; j < 4; ++j) {
            check_disjoint(*cls[i], *cls[j], "blowup classes overlap");
        }
    }
    if (t == 0) throw SizeMismatch("blowup classes must be non-empty");
    for (int i = 0; i < 4; ++i) {
        if (!all_within(g, Color::Red, *cls[i]) && !all_within(g, Color::Blue, *cls[i])) {
            return false;
        }
    }
    return all_cross(g, Color::Red, A0, A1) && all_cross(g, Color::Red, A2, A3) &&
           all_cross(g, Color::Blue, A1, A2) && all_cross(g, Color::Blue, A3, A0);
}

bool verify_local_pattern(const GraphColoring& g, const LocalPattern& w, std::size_t t) {
    if (t == 0) throw SizeMismatch("local pattern needs t >= 1");
    if (const auto* bic = std::get_if<InducedBiclique>(&w.inner)) {
        if (bic->side_a.size() != t || bic->side_b.size() != t) {
            throw SizeMismatch("biclique side sizes do not match t=" + std::to_string(t));
        }
        return verify_induced_biclique(g, bic->color, bic->side_a, bic->side_b);
    }
    const auto& p = std::get<PPattern>(w.inner);
    for (const VertexSet& part : p.parts) {
        if (part.size() != t) {
            throw SizeMismatch("P-pattern part sizes do not match t=" + std::to_string(t));
        }
    }
    return verify_p_pattern(g, p.parts[0], p.parts[1], p.parts[2], p.parts[3]);
}

bool verify_witness(const GraphColoring& g, const PatternWitness& w) {
    return std::visit(
        [&](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, MonoClique>) {
                return verify_mono_clique(g, v.color, v.members);
            } else if constexpr (std::is_same_v<T, InducedBiclique>) {
                return verify_induced_biclique(g, v.color, v.side_a, v.side_b);
            } else if constexpr (std::is_same_v<T, PPattern>) {
                return verify_p_pattern(g, v.parts[0], v.parts[1], v.parts[2], v.parts[3]);
            } else if constexpr (std::is_same_v<T, AltBlowup>) {
                return verify_alt_blowup(g, v.classes[0], v.classes[1], v.classes[2],
                                         v.classes[3]);
            } else {
                return verify_local_pattern(g, v, local_pattern_t(v));
            }
        },
        w);
}

std::size_t local_pattern_t(const LocalPattern& w) {
    if (const auto* bic = std::get_if<InducedBiclique>(&w.inner)) return bic->side_a.size();
    return std::get<PPattern>(w.inner).parts[0].size();
}

std::string witness_kind(const PatternWitness& w) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, MonoClique>) return "mono_clique";
            if constexpr (std::is_same_v<T, InducedBiclique>) return "induced_biclique";
            if constexpr (std::is_same_v<T, PPattern>) return "p_pattern";
            if constexpr (std::is_same_v<T, AltBlowup>) return "alt_blowup";
            if constexpr (std::is_same_v<T, LocalPattern>) return "local_pattern";
        },
        w);
}

namespace {

nlohmann::json sets_to_json(std::initializer_list<const VertexSet*> sets) {
    nlohmann::json arr = nlohmann::json::array();
    for (const VertexSet* s : sets) {
        nlohmann::json one = nlohmann::json::array();
        for (Vertex v : *s) one.push_back(v);
        arr.push_back(std::move(one));
    }
    return arr;
}

}  // namespace

nlohmann::json witness_to_json(const PatternWitness& w) {
    nlohmann::json j;
    j["kind"] = witness_kind(w);
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, MonoClique>) {
                j["color"] = color_name(v.color);
                j["sets"] = sets_to_json({&v.members});
            } else if constexpr (std::is_same_v<T, InducedBiclique>) {
                j["color"] = color_name(v.color);
                j["sets"] = sets_to_json({&v.side_a, &v.side_b});
            } else if constexpr (std::is_same_v<T, PPattern>) {
                j["sets"] = sets_to_json({&v.parts[0], &v.parts[1], &v.parts[2], &v.parts[3]});
            } else if constexpr (std::is_same_v<T, AltBlowup>) {
                j["sets"] = sets_to_json(
                    {&v.classes[0], &v.classes[1], &v.classes[2], &v.classes[3]});
            } else {
                PatternWitness inner = std::visit(
                    [](const auto& iw) { return PatternWitness(iw); }, v.inner);
                j["inner"] = witness_to_json(inner);
            }
        },
        w);
    return j;
}

namespace {

VertexSet set_from_json(const nlohmann::json& arr, std::size_t universe) {
    if (!arr.is_array()) throw FormatError(0, 0, "witness set is not an array");
    VertexSet s(universe);
    for (const auto& item : arr) {
        std::uint64_t v;
        if (item.is_number_unsigned()) {
            v = item.get<std::uint64_t>();
        } else if (item.is_number_integer() && item.get<std::int64_t>() >= 0) {
            v = static_cast<std::uint64_t>(item.get<std::int64_t>());
        } else {
            throw FormatError(0, 0, "witness set entry is not a non-negative integer");
        }
        if (v >= universe) {
            throw InvalidVertex("witness vertex " + std::to_string(v) +
                                " outside universe " + std::to_string(universe));
        }
        s.insert(static_cast<Vertex>(v));
    }
    return s;
}

Color color_from_json(const nlohmann::json& j) {
    if (!j.contains("color") || !j["color"].is_string()) {
        throw FormatError(0, 0, "witness is missing its color");
    }
    std::string c = j["color"].get<std::string>();
    if (c == "red") return Color::Red;
    if (c == "blue") return Color::Blue;
    throw FormatError(0, 0, "unknown color '" + c + "'");
}

std::vector<VertexSet> sets_from_json(const nlohmann::json& j, std::size_t universe,
                                      std::size_t expected) {
    if (!j.contains("sets") || !j["sets"].is_array() || j["sets"].size() != expected) {
        throw FormatError(0, 0, "witness needs exactly " + std::to_string(expected) +
                                    " vertex sets");
    }
    std::vector<VertexSet> out;
    for (const auto& arr : j["sets"]) out.push_back(set_from_json(arr, universe));
    return out;
}

}  // namespace

PatternWitness witness_from_json(const nlohmann::json& j, std::size_t universe) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw FormatError(0, 0, "witness JSON needs a string 'kind'");
    }
    std::string kind = j["kind"].get<std::string>();
    if (kind == "mono_clique") {
        auto sets = sets_from_json(j, universe, 1);
        return MonoClique{color_from_json(j), std::move(sets[0])};
    }
    if (kind == "induced_biclique") {
        auto sets = sets_from_json(j, universe, 2);
        return InducedBiclique{color_from_json(j), std::move(sets[0]), std::move(sets[1])};
    }
    if (kind == "p_pattern") {
        auto sets = sets_from_json(j, universe, 4);
        return PPattern{{std::move(sets[0]), std::move(sets[1]), std::move(sets[2]),
                         std::move(sets[3])}};
    }
    if (kind == "alt_blowup") {
        auto sets = sets_from_json(j, universe, 4);
        return AltBlowup{{std::move(sets[0]), std::move(sets[1]), std::move(sets[2]),
                          std::move(sets[3])}};
    }
    if (kind == "local_pattern") {
        if (!j.contains("inner")) throw FormatError(0, 0, "local pattern needs 'inner'");
        PatternWitness inner = witness_from_json(j["inner"], universe);
        if (const auto* bic = std::get_if<InducedBiclique>(&inner)) {
            return LocalPattern{*bic};
        }
        if (const auto* p = std::get_if<PPattern>(&inner)) {
            return LocalPattern{*p};
        }
        throw FormatError(0, 0, "local pattern inner must be a biclique or P-pattern");
    }
    throw FormatError(0, 0, "unknown witness kind '" + kind + "'");
}

}  // namespace unav
