#include "vle/aev.hpp"

#include <algorithm>

namespace vle {

bool is_zero(const AEVector& x) {
    return std::all_of(x.begin(), x.end(), [](const Int& v) { return v == 0; });
}

namespace {

// One monotone step x <- min(x, floor(a x / n)); no-op when n = 0.
bool reduce_step(const CountMatrix& a, const Int& n, AEVector& x) {
    if (n == 0) return false;
    bool changed = false;
    int dim = a.dim();
    AEVector ax(dim, 0);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) ax[i] += a.at(i, j) * x[j];
    for (int i = 0; i < dim; ++i) {
        Int bound = ax[i] / n;  // floor: operands nonnegative
        if (bound < x[i]) {
            x[i] = bound;
            changed = true;
        }
    }
    return changed;
}

void check_cap(const CountMatrix& a, const AEVector& cap) {
    if (static_cast<int>(cap.size()) != a.dim())
        throw Error("franaszek: cap dimension mismatch");
    for (const Int& c : cap)
        if (c < 0) throw Error("franaszek: cap must be nonnegative");
}

}  // namespace

AEVector franaszek_reduce(const CountMatrix& a, const Int& n, const AEVector& cap) {
    if (n < 0) throw Error("franaszek: n must be nonnegative");
    check_cap(a, cap);
    AEVector x = cap;
    while (reduce_step(a, n, x)) {
    }
    return x;
}

AEVector joint_franaszek(const CountMatrix& a0, const Int& n0, const CountMatrix& a1,
                         const Int& n1, const AEVector& cap) {
    if (a0.dim() != a1.dim()) throw Error("joint_franaszek: dimension mismatch");
    if (n0 < 0 || n1 < 0) throw Error("joint_franaszek: n0, n1 must be nonnegative");
    check_cap(a0, cap);
    AEVector x = cap;
    bool changed = true;
    while (changed) {
        changed = reduce_step(a0, n0, x);
        changed = reduce_step(a1, n1, x) || changed;
    }
    return x;
}

std::pair<CountMatrix, CountMatrix> parity_power_adjacency(const LabeledGraph& g, int t) {
    if (t <= 0) throw Error("parity_power_adjacency: t must be positive");
    if (!g.is_ordinary()) throw Error("parity_power_adjacency: input must be ordinary");
    int n = g.state_count();
    // Product states (u, parity), laid out as u + parity * n.
    CountMatrix prod(2 * n);
    for (const Edge& e : g.edges()) {
        int p = parity_of_word(e.label, g.alphabet());
        for (int q = 0; q <= 1; ++q) prod.at(e.from + q * n, e.to + (q ^ p) * n) += 1;
    }
    CountMatrix pt = prod.pow(t);
    CountMatrix a0(n), a1(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            a0.at(u, v) = pt.at(u, v);
            a1.at(u, v) = pt.at(u, v + n);
        }
    return {std::move(a0), std::move(a1)};
}

ExistenceResult fixed_length_existence(const LabeledGraph& g, int t, const Int& n0,
                                       const Int& n1, bool deterministic,
                                       const Int& cap_bound) {
    if (!g.is_ordinary()) throw Error("fixed_length_existence: input must be ordinary");
    if (!is_deterministic(g)) throw Error("fixed_length_existence: input must be deterministic");
    if (!is_irreducible(g)) throw Error("fixed_length_existence: input must be irreducible");
    if (cap_bound < 1) throw Error("fixed_length_existence: cap must be >= 1");

    auto [a0, a1] = parity_power_adjacency(g, t);
    ExistenceResult res;
    res.cap_bound = deterministic ? Int(1) : cap_bound;
    AEVector cap(g.state_count(), res.cap_bound);
    AEVector x = joint_franaszek(a0, n0, a1, n1, cap);
    res.exists = !is_zero(x);
    res.conclusive = deterministic || res.exists;
    res.vector_found = std::move(x);
    return res;
}

}  // namespace vle
