#include <doctest.h>

#include <unav/errors.hpp>
#include <unav/generate.hpp>
#include <unav/graph.hpp>
#include <unav/rng.hpp>
#include <unav/witness.hpp>

#include "helpers.hpp"

#include <json.hpp>

#include <array>

using namespace unav;
using fixtures::vs;

TEST_CASE("from_red_edges builds the expected colors and degrees") {
    GraphColoring g = fixtures::p1();
    CHECK(g.n() == 4);
    CHECK(g.color_of(0, 1) == Color::Red);
    CHECK(g.color_of(1, 0) == Color::Red);
    CHECK(g.color_of(2, 3) == Color::Blue);
    CHECK(g.color_of(1, 2) == Color::Blue);
    CHECK(g.degree(Color::Red, 0) == 2);
    CHECK(g.degree(Color::Red, 1) == 2);
    CHECK(g.degree(Color::Red, 2) == 1);
    CHECK(g.degree(Color::Red, 3) == 1);

    GraphColoring blue3 = GraphColoring::from_red_edges(3, {});
    for (Vertex v = 0; v < 3; ++v) CHECK(blue3.degree(Color::Blue, v) == 2);
}

TEST_CASE("graph constructor rejects malformed input") {
    CHECK_THROWS_AS(GraphColoring::from_red_edges(1, {}), TooSmall);
    CHECK_THROWS_AS(GraphColoring::from_red_edges(4, {{0, 0}}), SelfLoop);
    CHECK_THROWS_AS(GraphColoring::from_red_edges(4, {{0, 5}}), InvalidVertex);
    CHECK_THROWS_AS(GraphColoring::from_red_edges(4, {{0, 1}, {1, 0}}), DuplicatePair);
    GraphColoring g = fixtures::p1();
    CHECK_THROWS_AS(g.color_of(2, 2), SelfLoop);
    CHECK_THROWS_AS(g.color_of(0, 9), InvalidVertex);
}

TEST_CASE("degree restricted to a subset") {
    GraphColoring g = fixtures::p1();
    CHECK(g.degree(Color::Red, 0, vs(4, {1, 2})) == 2);
    CHECK(g.degree(Color::Blue, 0, vs(4, {1, 2})) == 0);
    CHECK(g.degree(Color::Red, 0, vs(4, {0, 3})) == 0);

    auto p2 = gen_p_pattern(2).coloring;
    CHECK(p2.degree(Color::Red, 0) == 5);
}

TEST_CASE("pair counts across and within sets") {
    auto p2 = gen_p_pattern(2).coloring;
    VertexSet v1 = vs(8, {0, 1});
    VertexSet v3 = vs(8, {4, 5});
    CHECK(p2.pair_count(Color::Red, v1, v3) == 4);
    CHECK(p2.pair_count(Color::Blue, v1, v3) == 0);
    CHECK(p2.pair_count_within(Color::Red, v1) == 1);
    CHECK(p2.pair_count_within(Color::Blue, vs(8, {4, 5, 6, 7})) == 6);
    CHECK_THROWS_AS(p2.pair_count(Color::Red, v1, vs(8, {1, 4})), OverlappingSets);
}

TEST_CASE("common neighbors of a seed set") {
    GraphColoring k4 = GraphColoring::from_red_edges(
        4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(k4.common_neighbors(Color::Red, vs(4, {0, 1})).to_vector() ==
          std::vector<Vertex>{2, 3});

    auto p2 = gen_p_pattern(2).coloring;
    CHECK(p2.common_neighbors(Color::Red, vs(8, {0, 1})).to_vector() ==
          std::vector<Vertex>{2, 3, 4, 5});
    CHECK(p2.common_neighbors(Color::Red, VertexSet(8)) == VertexSet::full(8));
}

TEST_CASE("degree thresholds validate and evaluate exactly") {
    CHECK(DegreeThreshold::linear(Rat(1, 4)).bound(4) == Rat(1));
    CHECK(DegreeThreshold::quarter_plus(Rat(1, 100)).bound(100) == Rat(26));
    CHECK_THROWS_AS(DegreeThreshold::quarter_plus(Rat(1, 4)), PreconditionFailed);
    CHECK_THROWS_AS(DegreeThreshold::quarter_plus(Rat(0)), PreconditionFailed);
    CHECK_THROWS_AS(DegreeThreshold::linear(Rat(1, 2)), PreconditionFailed);
    CHECK_THROWS_AS(DegreeThreshold::linear(Rat(-1, 10)), PreconditionFailed);

    GraphColoring p1 = fixtures::p1();
    CHECK(p1.min_degree_ok(DegreeThreshold::linear(Rat(1, 4))));
    CHECK_FALSE(p1.min_degree_ok(DegreeThreshold::quarter_plus(Rat(1, 100))));
    GraphColoring k5 = GraphColoring::from_red_edges(
        5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK_FALSE(k5.min_degree_ok(DegreeThreshold::linear(Rat(1, 10))));
}

TEST_CASE("induced subgraphs relabel in ascending order") {
    auto p2 = gen_p_pattern(2).coloring;
    auto [low, low_ids] = p2.induced(vs(8, {0, 1, 2, 3}));
    CHECK(low.n() == 4);
    CHECK(low_ids == std::vector<Vertex>{0, 1, 2, 3});
    for (Vertex i = 0; i < 4; ++i)
        for (Vertex j = i + 1; j < 4; ++j) CHECK(low.color_of(i, j) == Color::Red);

    auto [high, high_ids] = p2.induced(vs(8, {4, 5, 6, 7}));
    CHECK(high_ids == std::vector<Vertex>{4, 5, 6, 7});
    for (Vertex i = 0; i < 4; ++i)
        for (Vertex j = i + 1; j < 4; ++j) CHECK(high.color_of(i, j) == Color::Blue);

    auto [whole, ids] = p2.induced(VertexSet::full(8));
    CHECK(whole == p2);
    CHECK_THROWS_AS(p2.induced(vs(8, {3})), TooSmall);
}

TEST_CASE("color_swapped exchanges the degree profiles") {
    auto p2 = gen_p_pattern(2).coloring;
    GraphColoring sw = p2.color_swapped();
    for (Vertex v = 0; v < 8; ++v) {
        CHECK(sw.degree(Color::Red, v) == p2.degree(Color::Blue, v));
        CHECK(sw.degree(Color::Blue, v) == p2.degree(Color::Red, v));
    }
    CHECK(sw.color_swapped() == p2);
    CHECK(sw != p2);
}

TEST_CASE("encode produces the documented text form") {
    CHECK(encode(fixtures::p1()) == "UPC1 4\nRRB\nBR\nB\n");
    CHECK(decode("UPC1 4\nRRB\nBR\nB\n") == fixtures::p1());
}

TEST_CASE("decode reports precise error positions") {
    try {
        decode("UPC1 4\nRRX\nBR\nB\n");
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(decode("UPC2 4\nRRB\nBR\nB\n"), FormatError);
    CHECK_THROWS_AS(decode("UPC1 4\nRR\nBR\nB\n"), FormatError);
    CHECK_THROWS_AS(decode("UPC1 4\nRRB\nBR\nB\nextra\n"), FormatError);
    CHECK_THROWS_AS(decode("UPC1 1\n"), FormatError);
    CHECK_THROWS_AS(decode(""), FormatError);
}

TEST_CASE("encode and decode are inverse on random colorings") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        std::size_t n = 2 + seed % 17;
        GraphColoring g = gen_uniform(n, Rat(1, 3), seed);
        CHECK(decode(encode(g)) == g);
    }
}

TEST_CASE("mono clique verification") {
    auto p2 = gen_p_pattern(2).coloring;
    CHECK(verify_mono_clique(p2, Color::Red, vs(8, {0, 1, 2, 3})));
    CHECK_FALSE(verify_mono_clique(p2, Color::Red, vs(8, {0, 1, 2, 4})));
    CHECK_FALSE(verify_mono_clique(p2, Color::Blue, vs(8, {0, 1, 2, 3})));
    CHECK(verify_mono_clique(p2, Color::Red, vs(8, {5})));
    CHECK_THROWS_AS(verify_mono_clique(p2, Color::Red, VertexSet(8)), TooSmall);
    CHECK_THROWS_AS(verify_mono_clique(p2, Color::Red, vs(4, {0, 1})), SizeMismatch);
}

TEST_CASE("induced biclique verification and side symmetry") {
    GraphColoring g = fixtures::red_k22();
    CHECK(verify_induced_biclique(g, Color::Red, vs(4, {0, 1}), vs(4, {2, 3})));
    CHECK(verify_induced_biclique(g, Color::Red, vs(4, {2, 3}), vs(4, {0, 1})));
    CHECK_FALSE(verify_induced_biclique(g, Color::Red, vs(4, {0, 2}), vs(4, {1, 3})));

    auto p2 = gen_p_pattern(2).coloring;
    CHECK_FALSE(verify_induced_biclique(p2, Color::Red, vs(8, {0, 1}), vs(8, {4, 5})));

    CHECK_THROWS_AS(verify_induced_biclique(g, Color::Red, vs(4, {0, 1}), vs(4, {1, 2})),
                    OverlappingSets);
    CHECK_THROWS_AS(verify_induced_biclique(g, Color::Red, vs(4, {0}), vs(4, {2, 3})),
                    SizeMismatch);

    // Swapping the sides never changes the verdict.
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GraphColoring r = gen_uniform(8, Rat(1, 2), 900 + seed);
        Color c = seed % 2 ? Color::Red : Color::Blue;
        VertexSet a = vs(8, {0, 3});
        VertexSet b = vs(8, {5, 6});
        CHECK(verify_induced_biclique(r, c, a, b) == verify_induced_biclique(r, c, b, a));
    }
}

TEST_CASE("p pattern verification and its symmetries") {
    GraphColoring p1 = fixtures::p1();
    CHECK(verify_p_pattern(p1, vs(4, {0}), vs(4, {1}), vs(4, {2}), vs(4, {3})));
    CHECK(verify_p_pattern(p1, vs(4, {1}), vs(4, {0}), vs(4, {3}), vs(4, {2})));
    CHECK_FALSE(verify_p_pattern(p1, vs(4, {0}), vs(4, {2}), vs(4, {1}), vs(4, {3})));

    // Color swap composed with the part relabeling (V3,V4,V2,V1) is also a
    // symmetry: each rule maps onto a rule of the original tuple.
    GraphColoring swapped_g = p1.color_swapped();
    CHECK(verify_p_pattern(swapped_g, vs(4, {2}), vs(4, {3}), vs(4, {1}), vs(4, {0})));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GraphColoring g = gen_uniform(8, Rat(1, 2), 1200 + seed);
        GraphColoring sw = g.color_swapped();
        VertexSet v1 = vs(8, {0, 1}), v2 = vs(8, {2, 3}), v3 = vs(8, {4, 5}), v4 = vs(8, {6, 7});
        CHECK(verify_p_pattern(g, v1, v2, v3, v4) == verify_p_pattern(sw, v3, v4, v2, v1));
    }

    for (std::size_t m = 1; m <= 8; ++m) {
        auto inst = gen_p_pattern(m);
        CHECK(verify_p_pattern(inst.coloring, inst.parts[0], inst.parts[1], inst.parts[2],
                               inst.parts[3]));
    }

    CHECK_THROWS_AS(verify_p_pattern(p1, vs(4, {0}), vs(4, {1}), vs(4, {2}), VertexSet(4)),
                    SizeMismatch);
    CHECK_THROWS_AS(verify_p_pattern(p1, vs(4, {0, 1}), vs(4, {1}), vs(4, {2}), vs(4, {3})),
                    OverlappingSets);
}

TEST_CASE("alternating blowup verification") {
    GraphColoring g = fixtures::alt4();
    CHECK(verify_alt_blowup(g, vs(4, {0}), vs(4, {1}), vs(4, {2}), vs(4, {3})));
    CHECK_FALSE(verify_alt_blowup(g, vs(4, {1}), vs(4, {2}), vs(4, {3}), vs(4, {0})));

    auto p2 = gen_p_pattern(2).coloring;
    CHECK_FALSE(verify_alt_blowup(p2, vs(8, {0, 1}), vs(8, {4, 5}), vs(8, {6, 7}),
                                  vs(8, {2, 3})));
    CHECK(verify_alt_blowup(p2, vs(8, {0, 1}), vs(8, {4, 5}), vs(8, {2, 3}), vs(8, {6, 7})));
}

TEST_CASE("local pattern verification ties sizes to t") {
    GraphColoring g = fixtures::red_k22();
    LocalPattern w{InducedBiclique{Color::Red, vs(4, {0, 1}), vs(4, {2, 3})}};
    CHECK(verify_local_pattern(g, w, 2));
    CHECK(local_pattern_t(w) == 2);
    CHECK_THROWS_AS(verify_local_pattern(g, w, 3), SizeMismatch);

    GraphColoring p1 = fixtures::p1();
    LocalPattern pw{PPattern{{vs(4, {0}), vs(4, {1}), vs(4, {2}), vs(4, {3})}}};
    CHECK(verify_local_pattern(p1, pw, 1));
    CHECK(local_pattern_t(pw) == 1);
}

TEST_CASE("verify_witness dispatches on the variant") {
    auto p2 = gen_p_pattern(2).coloring;
    PatternWitness w = MonoClique{Color::Red, vs(8, {0, 1, 2, 3})};
    CHECK(verify_witness(p2, w));
    CHECK(witness_kind(w) == "mono_clique");
    PatternWitness bad = MonoClique{Color::Blue, vs(8, {0, 1, 2, 3})};
    CHECK_FALSE(verify_witness(p2, bad));
}

TEST_CASE("witness json round trips every kind") {
    auto p2 = gen_p_pattern(2).coloring;
    std::vector<PatternWitness> all = {
        MonoClique{Color::Red, vs(8, {0, 1, 2, 3})},
        InducedBiclique{Color::Blue, vs(8, {0, 1}), vs(8, {4, 5})},
        PPattern{{vs(8, {0, 1}), vs(8, {2, 3}), vs(8, {4, 5}), vs(8, {6, 7})}},
        AltBlowup{{vs(8, {0, 1}), vs(8, {4, 5}), vs(8, {2, 3}), vs(8, {6, 7})}},
        LocalPattern{InducedBiclique{Color::Red, vs(8, {0, 2}), vs(8, {4, 6})}},
        LocalPattern{PPattern{{vs(8, {0}), vs(8, {2}), vs(8, {4}), vs(8, {6})}}},
    };
    for (const PatternWitness& w : all) {
        nlohmann::json j = witness_to_json(w);
        PatternWitness back = witness_from_json(j, 8);
        CHECK(witness_kind(back) == witness_kind(w));
        CHECK(witness_to_json(back) == j);
    }

    nlohmann::json j = witness_to_json(all[0]);
    CHECK(j["kind"] == "mono_clique");
    CHECK(j["color"] == "red");
    CHECK(j["sets"][0] == nlohmann::json::array({0, 1, 2, 3}));

    CHECK_THROWS_AS(witness_from_json(nlohmann::json{{"kind", "sombrero"}}, 8), FormatError);
    nlohmann::json oob = {{"kind", "mono_clique"},
                          {"color", "red"},
                          {"sets", nlohmann::json::array({nlohmann::json::array({0, 99})})}};
    CHECK_THROWS_AS(witness_from_json(oob, 8), InvalidVertex);
}

TEST_CASE("color helpers") {
    CHECK(color_name(Color::Red) == std::string("red"));
    CHECK(color_name(Color::Blue) == std::string("blue"));
    CHECK(opposite(Color::Red) == Color::Blue);
    CHECK(opposite(Color::Blue) == Color::Red);
}
