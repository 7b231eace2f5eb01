#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "vle/graph.hpp"
#include "vle/spectral.hpp"

using namespace vle;
using namespace vle::testing;

TEST_SUITE_BEGIN("graphs");

TEST_CASE("parity_of_word basics") {
    auto w = [](std::vector<std::string> names) { return names; };
    ParityAlphabet eq2({"a", "b", "c", "d"}, {"c", "d"});
    CHECK(parity_of_word(w({}), eq2) == 0);  // empty word is even
    CHECK(parity_of_word(w({"b", "d"}), eq2) == 1);
    CHECK(parity_of_word(w({"c", "d"}), eq2) == 0);

    ParityAlphabet bits({"0", "1"}, {"1"});
    CHECK(parity_of_word(w({"1", "0", "0", "1", "0", "0"}), bits) == 0);
    CHECK(parity_of_word(w({"1", "0", "0", "0", "0", "0"}), bits) == 1);

    CHECK_THROWS_WITH_AS(parity_of_word(w({"x"}), bits), "unknown symbol 'x'", Error);
}

TEST_CASE("parity concatenation is xor") {
    std::mt19937_64 rng(7);
    ParityAlphabet ab({"a", "b", "c"}, {"b"});
    for (int trial = 0; trial < 200; ++trial) {
        Word x, y;
        for (size_t i = rng() % 6; i > 0; --i) x.push_back(rng() % 3);
        for (size_t i = rng() % 6; i > 0; --i) y.push_back(rng() % 3);
        Word xy = x;
        xy.insert(xy.end(), y.begin(), y.end());
        CHECK(parity_of_word(xy, ab) == (parity_of_word(x, ab) ^ parity_of_word(y, ab)));
    }
}

TEST_CASE("is_deterministic") {
    CHECK(is_deterministic(fig1()));
    CHECK(is_deterministic(fig3()));
    ParityAlphabet ab({"a", "b"}, {});
    LabeledGraph loops({"u"}, {{0, 0, {0}}, {0, 0, {0, 1}}}, ab);  // a prefixes ab
    CHECK_FALSE(is_deterministic(loops));
}

TEST_CASE("is_irreducible") {
    CHECK(is_irreducible(fig1()));
    CHECK(is_irreducible(fig5()));
    ParityAlphabet ab({"a"}, {});
    LabeledGraph oneway({"u", "v"}, {{0, 1, {0}}}, ab);
    CHECK_FALSE(is_irreducible(oneway));
    LabeledGraph lonely({"u"}, {}, ab);
    CHECK_FALSE(is_irreducible(lonely));  // singleton needs a self-loop
}

TEST_CASE("graph_power t=1 is the identity up to relabeling") {
    LabeledGraph g = fig1();
    LabeledGraph p = graph_power(g, 1);
    REQUIRE(p.edges().size() == g.edges().size());
    CHECK(adjacency(p) == adjacency(g));
    CHECK(p.alphabet().symbols() == g.alphabet().symbols());
}

TEST_CASE("graph_power counts match matrix powers and path enumeration") {
    // fig5 squared: rows alpha/beta/gamma against the hand-squared adjacency.
    LabeledGraph sq = graph_power(fig5(), 2);
    CountMatrix a = adjacency(sq);
    CountMatrix expect = adjacency(fig5()).pow(2);
    CHECK(a == expect);
    // Cross-check each entry against explicit path enumeration.
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) {
            long long n = count_paths_by_parity(fig5(), u, v, 2, 0) +
                          count_paths_by_parity(fig5(), u, v, 2, 1);
            CHECK(Int(n) == a.at(u, v));
        }
    // fig1 squared: 5 edges out of alpha, 3 out of beta.
    LabeledGraph sq1 = graph_power(fig1(), 2);
    CHECK(sq1.out_edges(0).size() == 5);
    CHECK(sq1.out_edges(1).size() == 3);
}

TEST_CASE("graph_power product symbols carry word parity") {
    LabeledGraph sq = graph_power(fig5(), 2);
    CHECK(sq.alphabet().symbols() == std::vector<std::string>{"00", "01", "10", "11"});
    CHECK(sq.alphabet().odd_symbols() == std::vector<std::string>{"01", "10"});
    CHECK_THROWS_AS(graph_power(fig3(), 2), Error);  // VLG input rejected
    CHECK_THROWS_AS(graph_power(fig1(), 0), Error);
}

TEST_CASE("expand_vlg") {
    LabeledGraph g = fig1();
    ExpandedVlg same = expand_vlg(g);
    CHECK(same.graph.state_count() == g.state_count());
    CHECK(same.graph.edges().size() == g.edges().size());

    ExpandedVlg ex3 = expand_vlg(fig3());
    CHECK(ex3.graph.state_count() == 3);  // alpha plus one dummy per length-2 loop

    ExpandedVlg ex8 = expand_vlg(fig8());
    CHECK(ex8.graph.state_count() == 6);  // 1 + 0 + 1 + 2 + 2

    // Back-mapping: dummies name their source edge, originals their state.
    CHECK(ex8.origin_state[0] == 0);
    int dummies = 0;
    for (size_t i = 0; i < ex8.origin_state.size(); ++i)
        if (ex8.origin_state[i] < 0) {
            ++dummies;
            CHECK(ex8.origin_edge[i] >= 0);
        }
    CHECK(dummies == 5);
}

TEST_CASE("expand_vlg preserves the language up to length 8") {
    for (const LabeledGraph& h : {fig3(), fig6(), fig8()}) {
        CHECK(language_upto(h, 8) == language_upto(expand_vlg(h).graph, 8));
    }
}

TEST_CASE("reduce_to_shannon_cover") {
    LabeledGraph g = fig1();
    LabeledGraph r = reduce_to_shannon_cover(g);
    CHECK(r.state_count() == 2);
    CHECK(language_upto(r, 8) == language_upto(g, 8));

    // beta duplicated into beta2 with the same outgoing profile collapses back.
    ParityAlphabet eq2({"a", "b", "c", "d"}, {"c", "d"});
    LabeledGraph dup({"alpha", "beta", "beta2"},
                     {{0, 0, {0}}, {0, 1, {1}}, {0, 2, {2}}, {1, 0, {3}}, {2, 0, {3}}},
                     eq2);
    LabeledGraph merged = reduce_to_shannon_cover(dup);
    CHECK(merged.state_count() == 2);
    CHECK(language_upto(merged, 8) == language_upto(dup, 8));

    LabeledGraph r5 = reduce_to_shannon_cover(fig5());
    CHECK(r5.state_count() == 3);

    // Idempotent, never grows.
    LabeledGraph again = reduce_to_shannon_cover(merged);
    CHECK(again.state_count() == merged.state_count());
    CHECK_THROWS_AS(reduce_to_shannon_cover(fig3()), Error);  // VLG rejected
}

TEST_CASE("parity_subgraph partitions the edges") {
    LabeledGraph g = fig1();
    LabeledGraph g0 = parity_subgraph(g, 0);
    LabeledGraph g1 = parity_subgraph(g, 1);
    CHECK(g0.edges().size() == 2);  // a, b
    CHECK(g1.edges().size() == 2);  // c, d
    CHECK(g0.edges().size() + g1.edges().size() == g.edges().size());
    for (const Edge& e : g0.edges()) CHECK(parity_of_word(e.label, g.alphabet()) == 0);
    for (const Edge& e : g1.edges()) CHECK(parity_of_word(e.label, g.alphabet()) == 1);

    LabeledGraph all_even = g.with_partition({});
    CHECK(parity_subgraph(all_even, 1).edges().empty());
}

TEST_CASE("induced_subgraph") {
    LabeledGraph g = fig5();
    LabeledGraph whole = induced_subgraph(g, {0, 1, 2});
    CHECK(whole.edges().size() == g.edges().size());
    LabeledGraph just_gamma = induced_subgraph(g, {2});
    REQUIRE(just_gamma.edges().size() == 1);
    CHECK(just_gamma.alphabet().render(just_gamma.edges()[0].label) == "0");
    LabeledGraph just_alpha = induced_subgraph(fig1(), {0});
    REQUIRE(just_alpha.edges().size() == 1);
    CHECK(just_alpha.alphabet().render(just_alpha.edges()[0].label) == "a");
    CHECK_THROWS_AS(induced_subgraph(g, {}), Error);
}

TEST_CASE("out_length_distribution") {
    LengthDistribution d3 = out_length_distribution(fig3(), 0);
    CHECK(d3.eta == std::vector<Int>{1, 1});
    CHECK(d3.omega == std::vector<Int>{0, 1});

    LengthDistribution d6 = out_length_distribution(fig6(), 0);
    CHECK(d6.eta == std::vector<Int>{1, 0});
    CHECK(d6.omega == std::vector<Int>{0, 2});

    LengthDistribution d8 = out_length_distribution(fig8(), 0);
    CHECK(d8.eta == std::vector<Int>{1, 0, 1});
    CHECK(d8.omega == std::vector<Int>{0, 1, 1});

    CHECK_THROWS_AS(out_length_distribution(fig3(), 5), Error);
}

TEST_SUITE_END();
