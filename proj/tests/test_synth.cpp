#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "vle/aev.hpp"
#include "vle/synth.hpp"

using namespace vle;
using namespace vle::testing;

TEST_SUITE_BEGIN("synth");

namespace {

std::set<std::string> cut_words(const LabeledGraph& host, const StateCut& cut) {
    std::set<std::string> out;
    for (const Word& w : cut.words) out.insert(host.alphabet().render(w));
    return out;
}

std::multiset<std::string> label_multiset(const LabeledGraph& g) {
    std::multiset<std::string> out;
    for (const Edge& e : g.edges()) out.insert(g.alphabet().render(e.label));
    return out;
}

}  // namespace

TEST_CASE("ordinary principal states on the squared RLL cover") {
    LabeledGraph sq = graph_power(fig5(), 2);
    PrincipalResult r1 = ordinary_principal_states(sq, 2, 1);
    CHECK(r1.status == SearchStatus::none);

    PrincipalResult r2 = ordinary_principal_states(sq, 2, 2);
    REQUIRE(r2.status == SearchStatus::found);
    REQUIRE(r2.principal_set == std::vector<int>{2});  // gamma
    CHECK(cut_words(sq, r2.cuts.at(2)) ==
          std::set<std::string>{"00", "01.00", "10.00"});
    // Witness mass is at least 1: K_r(mu, n) <= 0.
    CHECK(r2.reports.at(2).verdict);
}

TEST_CASE("ordinary principal states on the two-state constraint") {
    PrincipalResult r1 = ordinary_principal_states(fig1(), 2, 1);
    CHECK(r1.status == SearchStatus::none);
    // r = 2 admits {alpha} with the cut {a, bd, cd}.
    PrincipalResult r2 = ordinary_principal_states(fig1(), 2, 2);
    REQUIRE(r2.status == SearchStatus::found);
    CHECK(r2.principal_set == std::vector<int>{0});
    CHECK(cut_words(fig1(), r2.cuts.at(0)) == std::set<std::string>{"a", "bd", "cd"});
}

TEST_CASE("ordinary principal set is monotone in r") {
    LabeledGraph sq = graph_power(fig5(), 2);
    std::vector<int> prev;
    for (int r = 1; r <= 4; ++r) {
        PrincipalResult pr = ordinary_principal_states(sq, 2, r);
        std::vector<int> cur = pr.principal_set;
        CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
        prev = cur;
    }
}

TEST_CASE("trim_ordinary") {
    // Fig-6 subgraph is already exact.
    EncoderCandidate same = trim_ordinary(fig6(), 2);
    CHECK(label_multiset(same.graph) == label_multiset(fig6()));
    CHECK(same.trim_log.at("gamma").even_removed + same.trim_log.at("gamma").odd_removed == 0);

    // Overfull state: one hypothetical extra length-2 edge gets removed.
    ParityAlphabet p4({"00", "01", "10", "11"}, {"01", "10"});
    LabeledGraph overfull({"gamma"},
                          {{0, 0, {0}}, {0, 0, {1, 0}}, {0, 0, {2, 0}}, {0, 0, {3, 0}}},
                          p4);
    EncoderCandidate trimmed = trim_ordinary(overfull, 2);
    CHECK(trimmed.graph.edges().size() == 3);
    // Longest-first, lexicographically largest label goes first: 11.00.
    CHECK(label_multiset(trimmed.graph) ==
          std::multiset<std::string>{"00", "01.00", "10.00"});

    // Whole alphabet at a single state stays put.
    ParityAlphabet bits({"0", "1"}, {"1"});
    LabeledGraph whole({"u"}, {{0, 0, {0}}, {0, 0, {1}}}, bits);
    CHECK(trim_ordinary(whole, 2).graph.edges().size() == 2);

    LabeledGraph thin({"u"}, {{0, 0, {0}}}, bits);
    CHECK_THROWS_AS(trim_ordinary(thin, 2), Error);  // mass 1/2 < 1
}

TEST_CASE("pp_principal_check") {
    // Fig 6 at {gamma} under (1,1) fails; Fig 8 passes with K+ = K- = 0.
    PPCheckResult bad = pp_principal_check(fig6(), {0}, 1, 1);
    CHECK_FALSE(bad.all_pass);
    PPCheckResult good = pp_principal_check(fig8(), {0}, 1, 1);
    CHECK(good.all_pass);
    CHECK(good.states.at(0).report.k_plus.back() == 0);
    CHECK(good.states.at(0).report.k_minus.back() == 0);

    // Fixed-length slice viewed as a VLG: all edges of length r, balanced
    // out-degrees; passes exactly when (n0+n1)^r + |n0-n1|^r <= 2 n^(r).
    for (int r = 1; r <= 3; ++r)
        for (int nr = 1; nr <= 8; ++nr) {
            LengthDistribution d;
            d.eta.assign(r, 0);
            d.omega.assign(r, 0);
            d.eta[r - 1] = nr;
            d.omega[r - 1] = nr;
            // Build a one-state VLG with nr even and nr odd length-r loops.
            std::vector<std::string> syms;
            for (int i = 0; i < 2 * nr + 1; ++i) syms.push_back("x" + std::to_string(i));
            std::vector<std::string> odd(syms.begin() + nr, syms.begin() + 2 * nr);
            ParityAlphabet alpha(syms, odd);
            std::vector<Edge> edges;
            for (int i = 0; i < 2 * nr; ++i) {
                Word w(r, 2 * nr);  // padding symbol, even
                w[0] = i;
                edges.push_back({0, 0, w});
            }
            LabeledGraph h({"u"}, edges, alpha);
            bool pass = pp_principal_check(h, {0}, 1, 1).all_pass;
            bool expect = ipow(2, r) <= Int(2 * nr);  // |n0 - n1| = 0 here
            CHECK(pass == expect);
        }
}

TEST_CASE("pp_principal_search on the squared RLL cover") {
    LabeledGraph sq = graph_power(fig5(), 2);
    PrincipalResult r2 = pp_principal_search(sq, 1, 1, 2);
    CHECK(r2.status == SearchStatus::none);

    PrincipalResult r3 = pp_principal_search(sq, 1, 1, 3);
    REQUIRE(r3.status == SearchStatus::found);
    CHECK(r3.principal_set == std::vector<int>{2});
    CHECK(cut_words(sq, r3.cuts.at(2)) ==
          std::set<std::string>{"00", "01.00", "10.00.00", "10.01.00"});
}

TEST_CASE("pp_principal_search on the two-state constraint") {
    PrincipalResult r2 = pp_principal_search(fig1(), 1, 1, 2);
    REQUIRE(r2.status == SearchStatus::found);
    CHECK(r2.principal_set == std::vector<int>{0});
    CHECK(cut_words(fig1(), r2.cuts.at(0)) == std::set<std::string>{"a", "bd", "cd"});

    // The {a}/{b,c,d} partition admits nothing up to r = 3.
    LabeledGraph alt = fig1().with_partition({"b", "c", "d"});
    for (int r = 1; r <= 3; ++r)
        CHECK(pp_principal_search(alt, 1, 1, r).status == SearchStatus::none);
}

TEST_CASE("pp_principal_search budget reporting") {
    SearchOptions opts;
    opts.max_r = 2;
    PrincipalResult res = pp_principal_search(fig1(), 1, 1, 3, &opts);
    CHECK(res.status == SearchStatus::inconclusive);
    CHECK(res.note.find("budget") != std::string::npos);
}

TEST_CASE("r=1 search equals the 0-1 joint eigenvector criterion") {
    std::mt19937_64 rng(2024);
    int trials = 0;
    while (trials < 200) {
        LabeledGraph g = random_det_irreducible(rng, 4, 6);
        int n0 = 1 + rng() % 3, n1 = 1 + rng() % 3;
        ++trials;
        PrincipalResult pr = pp_principal_search(g, n0, n1, 1);
        auto [a0, a1] = parity_power_adjacency(g, 1);
        AEVector ones(g.state_count(), 1);
        AEVector x = joint_franaszek(a0, n0, a1, n1, ones);
        if (is_zero(x)) {
            CHECK(pr.status == SearchStatus::none);
        } else {
            REQUIRE(pr.status == SearchStatus::found);
            std::vector<int> support;
            for (int i = 0; i < g.state_count(); ++i)
                if (x[i] > 0) support.push_back(i);
            CHECK(pr.principal_set == support);
        }
    }
}

TEST_CASE("trim_pp") {
    // Fig 8 is already exact.
    EncoderCandidate same = trim_pp(fig8(), 1, 1);
    CHECK(label_multiset(same.graph) == label_multiset(fig8()));

    // eta=(1,0,2), omega=(0,1,1): K+ = -1, K- = -1, so one even length-3
    // edge is removed.
    ParityAlphabet p4({"00", "01", "10", "11"}, {"01", "10"});
    LabeledGraph h2({"u"},
                    {{0, 0, {0}},            // 00, even
                     {0, 0, {1, 0}},         // 01.00, odd
                     {0, 0, {1, 1, 0}},      // 01.11.00, odd
                     {0, 0, {3, 3, 3}},      // 11.11.11, even
                     {0, 0, {0, 0, 0}}},     // 00.00.00, even
                    p4);
    LengthDistribution d2 = out_length_distribution(h2, 0);
    CHECK(d2.eta == std::vector<Int>{1, 0, 2});
    CHECK(d2.omega == std::vector<Int>{0, 1, 1});
    EncoderCandidate trimmed = trim_pp(h2, 1, 1);
    CHECK(trimmed.trim_log.at("u").even_removed == 1);
    CHECK(trimmed.trim_log.at("u").odd_removed == 0);
    // Lexicographically largest even length-3 label goes: 11.11.11.
    CHECK(label_multiset(trimmed.graph) ==
          std::multiset<std::string>{"00", "01.00", "01.11.00", "00.00.00"});
    // The result now satisfies K+ = K- = 0 at every state.
    PPCheckResult after = pp_principal_check(trimmed.graph, {0}, 1, 1);
    CHECK(after.states.at(0).report.k_plus.back() == 0);
    CHECK(after.states.at(0).report.k_minus.back() == 0);

    CHECK_THROWS_AS(trim_pp(fig6(), 1, 1), Error);  // fails (C1)/(C2)
}

TEST_CASE("trim preserves earlier C2 values") {
    // Removal touches only maximal-length edges, so K values below r(u) are
    // untouched.
    ParityAlphabet p4({"00", "01", "10", "11"}, {"01", "10"});
    LabeledGraph h2({"u"},
                    {{0, 0, {0}},
                     {0, 0, {1, 0}},
                     {0, 0, {1, 1, 0}},
                     {0, 0, {3, 3, 3}},
                     {0, 0, {0, 0, 0}}},
                    p4);
    PPCheckResult before = pp_principal_check(h2, {0}, 1, 1);
    EncoderCandidate trimmed = trim_pp(h2, 1, 1);
    PPCheckResult after = pp_principal_check(trimmed.graph, {0}, 1, 1);
    for (size_t ell = 0; ell + 1 < before.states.at(0).report.k_plus.size(); ++ell) {
        CHECK(before.states.at(0).report.k_plus[ell] == after.states.at(0).report.k_plus[ell]);
        CHECK(before.states.at(0).report.k_minus[ell] ==
              after.states.at(0).report.k_minus[ell]);
    }
}

TEST_CASE("language_containment") {
    CHECK(language_containment(fig3(), fig1()));
    CHECK(language_containment(fig8(), graph_power(fig5(), 2)));
    CHECK(language_containment(fig6(), graph_power(fig5(), 2)));

    // An extra d-loop at alpha escapes the constraint (dd is not allowed).
    ParityAlphabet eq2({"a", "b", "c", "d"}, {"c", "d"});
    LabeledGraph bigger({"alpha", "beta"},
                        {{0, 0, {0}}, {0, 1, {1}}, {0, 1, {2}}, {1, 0, {3}}, {0, 0, {3}}},
                        eq2);
    CHECK_FALSE(language_containment(bigger, fig1()));
}

TEST_CASE("verify_vle discriminates") {
    LabeledGraph sq = graph_power(fig5(), 2);

    VerifyReport fig6_ordinary = verify_vle(fig6(), sq, 2, 0, false);
    CHECK(fig6_ordinary.pass);

    VerifyReport fig6_parity = verify_vle(fig6(), sq, 1, 1, true);
    CHECK_FALSE(fig6_parity.pass);
    CHECK(fig6_parity.e3);
    CHECK(fig6_parity.states.at(0).e4_failures == std::vector<int>{2});

    VerifyReport fig3_parity = verify_vle(fig3(), fig1(), 1, 1, true);
    CHECK(fig3_parity.pass);

    VerifyReport fig8_parity = verify_vle(fig8(), sq, 1, 1, true);
    CHECK(fig8_parity.pass);
}

TEST_CASE("synthesized encoders verify") {
    LabeledGraph sq = graph_power(fig5(), 2);
    PrincipalResult ord = ordinary_principal_states(sq, 2, 2);
    EncoderCandidate e1 = trim_ordinary(cut_subgraph(sq, ord), 2);
    CHECK(verify_vle(e1.graph, sq, 2, 0, false).pass);

    PrincipalResult pp = pp_principal_search(sq, 1, 1, 3);
    EncoderCandidate e2 = trim_pp(cut_subgraph(sq, pp), 1, 1);
    CHECK(verify_vle(e2.graph, sq, 1, 1, true).pass);
    CHECK(label_multiset(e2.graph) ==
          std::multiset<std::string>{"00", "01.00", "10.00.00", "10.01.00"});

    PrincipalResult pp1 = pp_principal_search(fig1(), 1, 1, 2);
    EncoderCandidate e3 = trim_pp(cut_subgraph(fig1(), pp1), 1, 1);
    CHECK(verify_vle(e3.graph, fig1(), 1, 1, true).pass);
    CHECK(label_multiset(e3.graph) == std::multiset<std::string>{"a", "bd", "cd"});
}

TEST_SUITE_END();
