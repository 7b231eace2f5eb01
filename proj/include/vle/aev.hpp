#ifndef VLE_AEV_HPP_
#define VLE_AEV_HPP_

#include <utility>
#include <vector>

#include "vle/graph.hpp"
#include "vle/spectral.hpp"

namespace vle {

// Nonnegative integer vector indexed by states; a member of X(A, n) when
// nonzero and A x >= n x componentwise.
using AEVector = std::vector<Int>;

bool is_zero(const AEVector& x);

// Largest element of X(a, n) ∪ {0} dominated by cap, by iterating
// x <- min(x, floor(a x / n)) from cap.  n = 0 makes the constraint vacuous
// and returns cap unchanged.
AEVector franaszek_reduce(const CountMatrix& a, const Int& n, const AEVector& cap);

// Largest element of X(a0, n0) ∩ X(a1, n1) dominated by cap (or zero),
// alternating both reductions to a common fixed point.
AEVector joint_franaszek(const CountMatrix& a0, const Int& n0, const CountMatrix& a1,
                         const Int& n1, const AEVector& cap);

// Even/odd path-count matrices (A_(G^t)_0, A_(G^t)_1): the t-th power of the
// state-parity product graph, read off without materializing G^t.
std::pair<CountMatrix, CountMatrix> parity_power_adjacency(const LabeledGraph& g, int t);

struct ExistenceResult {
    bool exists = false;
    // Conclusive for deterministic encoders (0-1 cap); otherwise a zero
    // result only certifies emptiness below the cap bound.
    bool conclusive = false;
    Int cap_bound;
    AEVector vector_found;
};

// Fixed-length (S, n0, n1)-encoder existence test on an ordinary
// deterministic irreducible presentation, at the given power t.
ExistenceResult fixed_length_existence(const LabeledGraph& g, int t, const Int& n0,
                                       const Int& n1, bool deterministic,
                                       const Int& cap_bound = 64);

}  // namespace vle

#endif
