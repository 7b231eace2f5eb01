#ifndef VLE_SYNTH_HPP_
#define VLE_SYNTH_HPP_

#include <map>
#include <string>
#include <vector>

#include "vle/graph.hpp"
#include "vle/kraft.hpp"

namespace vle {

enum class SearchStatus {
    found,         // a principal set (with witness cuts) exists
    none,          // conclusively none within the given r
    inconclusive,  // budget exceeded before the sweep finished
};

// A per-state witness cut: prefix-free label words with their terminal states.
struct StateCut {
    std::vector<Word> words;
    std::vector<int> terminals;  // parallel to words, indices into the host graph
};

struct PrincipalResult {
    SearchStatus status = SearchStatus::none;
    std::vector<int> principal_set;  // ascending state indices
    std::map<int, StateCut> cuts;
    // Ordinary search: k_plus holds K_l(mu, n) and the verdict is the mass
    // test K_r <= 0.  Parity search: the full (C1)/(C2) evaluation.
    std::map<int, KraftReport> reports;
    std::string note;
};

// One line per examined candidate subset, for exhaustive-search reporting.
struct SubsetOutcome {
    std::vector<int> subset;
    bool passed = false;
    bool inconclusive = false;
    int failing_state = -1;  // first state with no passing cut
};

struct SearchOptions {
    int max_r = 4;
    long long max_tree_nodes = 10000;   // per-state path-tree budget
    long long max_work = 5'000'000;     // distribution-set work budget
    bool parallel = false;              // fan out over candidate subsets
    bool collect_survey = false;
    std::vector<SubsetOutcome> survey;  // filled when collect_survey is set
};

// Iterative elimination over candidate sets: state u survives while the
// maximal Kraft mass c_r(u) over prefix-free path sets of length <= r
// (terminals inside the candidate set) stays >= 1, computed by the exact
// tree recurrence c_t(u) = (1/n) sum_edges max(cut, c_(t-1)).  Returns the
// maximal surviving set with one witness cut per state.
PrincipalResult ordinary_principal_states(const LabeledGraph& g, const Int& n, int r);

// Evaluates (C1) K+(u) <= -|K-(u)| and (C2) K+_l(u) >= |K-_l(u)| for
// l < r(u) on the subgraph induced by `keep`.
struct PPStateCheck {
    KraftReport report;
    bool c1 = false;
    std::vector<int> c2_failures;
    bool pass = false;
};

struct PPCheckResult {
    std::map<int, PPStateCheck> states;
    bool all_pass = false;
};

PPCheckResult pp_principal_check(const LabeledGraph& h, const std::vector<int>& keep,
                                 int n0, int n1);

// Exhaustive search for a parity-preserving principal set: candidate subsets
// in decreasing size, then canonical order; per state, achievable cut
// distributions are collected by a memoized tree-cut sweep and checked
// against (C1)/(C2).  Negative answers are bounded claims for the given r.
PrincipalResult pp_principal_search(const LabeledGraph& g, int n0, int n1, int r,
                                    SearchOptions* opts = nullptr);

// The VLG assembled from a principal result's witness cuts.
LabeledGraph cut_subgraph(const LabeledGraph& g, const PrincipalResult& pr);

struct TrimEntry {
    Int even_removed;
    Int odd_removed;
};

struct EncoderCandidate {
    LabeledGraph graph;
    PrincipalResult source;
    std::map<std::string, TrimEntry> trim_log;  // by state name
};

// Removes longest edges (descending length, lexicographically last label
// first) until every state's Kraft sum hits equality.  States must start
// with mass >= 1.
EncoderCandidate trim_ordinary(const LabeledGraph& h, const Int& n);

// Removes y+ even and y- odd edges of maximal length at each state, with
// y± = -(K+ ± K-)/2, leaving K+(u) = K-(u) = 0.  Requires (C1)/(C2) to hold
// on all states of h.
EncoderCandidate trim_pp(const LabeledGraph& h, int n0, int n1);

// True iff every word generated from every state of e lies in S(g); walks
// the product of expanded-e states with g-state subsets.
bool language_containment(const LabeledGraph& e, const LabeledGraph& g);

struct VerifyStateItem {
    int state = 0;
    bool kraft_equality = false;   // E3 at n = n0 + n1
    Int k_plus_r;
    Int k_minus_r;                // parity mode
    std::vector<int> e4_failures;  // parity mode
};

struct VerifyReport {
    bool parity_mode = false;
    bool deterministic = false;  // E1 via determinism
    bool containment = false;    // E2
    bool e3 = false;
    bool e4 = true;              // trivially true outside parity mode
    bool kminus_zero = true;
    std::vector<VerifyStateItem> states;
    bool pass = false;
};

// Itemized (E1)-(E3) check, plus (E4) and K-(u) = 0 when parity is set.
// Failures are report items, not errors.
VerifyReport verify_vle(const LabeledGraph& e, const LabeledGraph& g, int n0, int n1,
                        bool parity);

}  // namespace vle

#endif
