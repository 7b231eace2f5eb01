#include <doctest.h>

#include <string>

#include "oracles.hpp"
#include "vle/graph_io.hpp"
#include "vle/synth.hpp"

using namespace vle;
using namespace vle::testing;

TEST_SUITE_BEGIN("io");

namespace {
const std::string kFix = VLE_FIXTURES_DIR;
}

TEST_CASE("fixtures load and satisfy their documented predicates") {
    LabeledGraph g1 = load_graph(kFix + "/fig1.json");
    CHECK(is_deterministic(g1));
    CHECK(is_irreducible(g1));
    CHECK(g1.is_ordinary());

    LabeledGraph g3 = load_graph(kFix + "/fig3.json");
    CHECK(is_deterministic(g3));
    CHECK(is_irreducible(g3));
    CHECK_FALSE(g3.is_ordinary());

    LabeledGraph g4 = load_graph(kFix + "/fig4.json");
    CHECK_FALSE(is_deterministic(g4));  // non-deterministic fixture
    CHECK(is_irreducible(g4));

    LabeledGraph g5 = load_graph(kFix + "/fig5.json");
    CHECK(is_deterministic(g5));
    CHECK(is_irreducible(g5));

    for (const char* name : {"/fig6.json", "/fig8.json"}) {
        LabeledGraph g = load_graph(kFix + name);
        CHECK(is_deterministic(g));
        CHECK(is_irreducible(g));
    }

    // fig2 is a tagged but non-deterministic, non-parity-preserving encoder.
    TaggedEncoder t2 = load_tagged(kFix + "/fig2.json");
    CHECK_FALSE(is_deterministic(t2.graph));
    CHECK_FALSE(t2.parity_preserving);

    TaggedEncoder tab1 = load_tagged(kFix + "/table1.json");
    CHECK(tab1.parity_preserving);
    TaggedEncoder tab2 = load_tagged(kFix + "/table2.json");
    CHECK_FALSE(tab2.parity_preserving);
    TaggedEncoder tab3 = load_tagged(kFix + "/table3.json");
    CHECK(tab3.parity_preserving);
}

TEST_CASE("fixture graphs match the programmatic copies") {
    CHECK(language_upto(load_graph(kFix + "/fig1.json"), 6) == language_upto(fig1(), 6));
    CHECK(language_upto(load_graph(kFix + "/fig5.json"), 6) == language_upto(fig5(), 6));
    CHECK(language_upto(load_graph(kFix + "/fig8.json"), 6) == language_upto(fig8(), 6));
}

TEST_CASE("round trip through JSON") {
    LabeledGraph g = fig1();
    LabeledGraph back = graph_from_json(nlohmann::json::parse(graph_to_json(g).dump()));
    CHECK(back.states() == g.states());
    CHECK(back.edges().size() == g.edges().size());
    CHECK(back.alphabet() == g.alphabet());

    TaggedEncoder t = load_tagged(kFix + "/table3.json");
    TaggedEncoder tback =
        tagged_from_json(nlohmann::json::parse(tagged_to_json(t).dump()));
    CHECK(tback.tags == t.tags);
    CHECK(tback.start_state == t.start_state);
}

TEST_CASE("unknown keys and malformed files are rejected") {
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(
                        R"({"alphabet":["a"],"odd":[],"states":["u"],"edges":[],"bogus":1})")),
                    Error);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(
                        R"({"alphabet":["a"],"odd":[],"states":["u"],
                            "edges":[{"from":"u","to":"u","label":["a"],"x":1}]})")),
                    Error);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(
                        R"({"alphabet":["a"],"odd":[],"states":["u"]})")),
                    Error);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(
                        R"({"alphabet":["a"],"odd":["b"],"states":["u"],"edges":[]})")),
                    Error);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(
                        R"({"alphabet":["a"],"odd":[],"states":["u"],
                            "edges":[{"from":"u","to":"v","label":["a"]}]})")),
                    Error);
    CHECK_THROWS_AS(load_graph(kFix + "/does_not_exist.json"), Error);
}

TEST_CASE("degenerate graphs: constructors accept, analyses reject") {
    ParityAlphabet ab({"a"}, {});
    LabeledGraph empty_edges({"u", "v"}, {}, ab);
    CHECK(empty_edges.is_ordinary());
    CHECK_FALSE(is_irreducible(empty_edges));
    CHECK_THROWS_AS(ordinary_principal_states(empty_edges, 2, 1), Error);
}

TEST_SUITE_END();
