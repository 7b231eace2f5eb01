// Test-only brute-force oracles and fixture builders.  Everything here is
// independent of the library's feasibility/search code paths it is used to
// check: plain long long arithmetic and explicit enumeration throughout.
#ifndef VLE_TESTS_ORACLES_HPP_
#define VLE_TESTS_ORACLES_HPP_

#include <random>
#include <set>
#include <string>
#include <vector>

#include "vle/graph.hpp"

namespace vle::testing {

// Programmatic copies of the fixture graphs.
LabeledGraph fig1();   // two-state constraint, odd {c,d}
LabeledGraph fig3();   // single-state VLG {a, bd, cd}
LabeledGraph fig5();   // (2,inf)-RLL Shannon cover
LabeledGraph fig6();   // {00, 01.00, 10.00} at gamma
LabeledGraph fig8();   // {00, 01.00, 10.00.00, 10.01.00} at gamma

// Distribution keys (eta_1..eta_r, omega_1..omega_r) with fixed r.
using DistVec = std::vector<long long>;

// Distributions of every exhaustive prefix-free list with word lengths
// <= max_len over an alphabet with n0 even and n1 odd symbols, by explicit
// tree-cut enumeration.
std::set<DistVec> enumerate_feasible_distributions(int n0, int n1, int max_len);

// Condition-(b) failure sets achievable by nonnegative (eta, omega) with
// support exactly r, K+ = K- = 0, and entries <= entry_cap, for n0 = n1 = 1.
std::set<std::vector<int>> enumerate_admissible_failure_sets_11(int r, int entry_cap);

// All nonzero x <= cap (componentwise) with a0 x >= n0 x and a1 x >= n1 x,
// by exhaustive enumeration over small integer boxes.
std::vector<std::vector<long long>> enumerate_joint_vectors(
    const std::vector<std::vector<long long>>& a0, long long n0,
    const std::vector<std::vector<long long>>& a1, long long n1, long long cap);

// Number of length-t paths u -> v with the given label parity, by DFS.
long long count_paths_by_parity(const LabeledGraph& g, int u, int v, int t, int parity);

// All words of length <= max_len generated from any state (rendered strings).
std::set<std::string> language_upto(const LabeledGraph& g, int max_len);

// Random deterministic irreducible ordinary graph with <= max_states states
// and <= max_symbols symbols, random parity partition.
LabeledGraph random_det_irreducible(std::mt19937_64& rng, int max_states, int max_symbols);

}  // namespace vle::testing

#endif
