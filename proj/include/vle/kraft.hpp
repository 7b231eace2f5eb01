#ifndef VLE_KRAFT_HPP_
#define VLE_KRAFT_HPP_

#include <optional>
#include <vector>

#include "vle/alphabet.hpp"
#include "vle/graph.hpp"
#include "vle/numeric.hpp"

namespace vle {

// K_l values and the two feasibility conditions for a length distribution:
// (a) K+ = 0 at l = r, and (b) K+_l >= |K-_l| for l = 1..r.
struct KraftReport {
    std::vector<Int> k_plus;   // l = 1..r
    std::vector<Int> k_minus;  // l = 1..r
    bool condition_a = false;
    std::vector<int> condition_b_failures;  // lengths violating (b)
    bool verdict = false;
};

// Even/odd proper-prefix counts (y_l, z_l), index 0 = empty word.
struct PrefixCounts {
    std::vector<Rat> y;
    std::vector<Rat> z;
};

struct AdmissibilityWitness {
    std::vector<int> zset;
    std::vector<Int> xi;  // only populated when n0 == n1 == 1
    std::optional<LengthDistribution> witness;
    bool admissible = false;
};

// K_l(mu, n) = n^l - sum_{i=1..l} mu_i n^(l-i), exact, any integer n.
// The 0^0 = 1 convention makes n = 0 give -mu_l.
Int kraft_functional(const std::vector<Int>& mu, const Int& n, int ell);

// True iff sum mu_l / n^l = 1, decided exactly as K_r(mu, n) = 0.
bool check_ordinary_kraft(const std::vector<Int>& mu, const Int& n);

// Full evaluation of conditions (a) and (b) for l = 1..r; values for larger l
// are determined by the l = r case, so the report stops there.
KraftReport check_parity_kraft(const LengthDistribution& d, int n0, int n1);

// Forward recurrence y_l = n0 y_(l-1) + n1 z_(l-1) - eta_l (and symmetrically
// for z) from (y_0, z_0) = (1, 0), for l = 0..r.
PrefixCounts yz_forward(const LengthDistribution& d, int n0, int n1);

// Closed tail sums for y_l +- z_l, solved per l as exact rationals.  Entries
// may be fractional or negative when d is infeasible.  For n0 == n1 the
// difference at l = 0 is pinned to 1 (the equations leave it free there).
PrefixCounts yz_backward(const LengthDistribution& d, int n0, int n1);

// Exhaustive prefix-free list with |L ∩ Y^l| = mu_l; the leftover leaves at
// each level are the lexicographically last ones, which get expanded.
// Rejects infeasible mu, quoting the failing Kraft value.
std::vector<Word> build_exhaustive_prefix_free(const std::vector<Int>& mu,
                                               const ParityAlphabet& alphabet);

// Exhaustive prefix-free list with parity length distribution exactly d,
// built level by level with yz_forward sizing the retained internal sets
// (lexicographically first within each parity bucket).  Rejects infeasible d
// with its KraftReport attached to the message.
std::vector<Word> build_parity_prefix_free(const LengthDistribution& d,
                                           const ParityAlphabet& alphabet);

struct ListValidation {
    bool prefix_free = false;
    bool exhaustive = false;
    LengthDistribution distribution;
};

ListValidation validate_list(const std::vector<Word>& words, const ParityAlphabet& alphabet);

// xi_1 = 1; xi_l = xi_(l-1) - 1 when l-1 is in zset, else 2 xi_(l-1).
std::vector<Int> xi_sequence(const std::vector<int>& zset, int r);

// Decides whether exactly the condition-(b) checks indexed by zset can fail
// while K+ = K- = 0 holds, and materializes a self-checked witness
// distribution when they can.
AdmissibilityWitness is_admissible(const std::vector<int>& zset, int n0, int n1, int r);

}  // namespace vle

#endif
