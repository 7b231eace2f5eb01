#ifndef VLE_SPECTRAL_HPP_
#define VLE_SPECTRAL_HPP_

#include <map>
#include <vector>

#include "vle/graph.hpp"
#include "vle/numeric.hpp"

namespace vle {

// Square nonnegative integer matrix indexed by state pairs.
class CountMatrix {
public:
    CountMatrix() = default;
    explicit CountMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0) {
        if (n < 1) throw Error("matrix: dimension must be >= 1");
    }

    int dim() const { return n_; }
    Int& at(int i, int j) { return a_.at(static_cast<size_t>(i) * n_ + j); }
    const Int& at(int i, int j) const { return a_.at(static_cast<size_t>(i) * n_ + j); }

    CountMatrix operator*(const CountMatrix& o) const;
    static CountMatrix identity(int n);
    CountMatrix pow(int t) const;

    bool operator==(const CountMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

private:
    int n_ = 0;
    std::vector<Int> a_;
};

// Edge-length multiplicities per state pair: entry (u,v) maps l to the number
// of length-l edges u -> v.  Evaluating at rational theta gives the matrix
// with entries sum_l mult * theta^(-l).
struct ThetaMatrix {
    int n = 0;
    std::vector<std::map<int, Int>> cells;  // n*n, row-major

    static ThetaMatrix of(const LabeledGraph& h);
    const std::map<int, Int>& cell(int u, int v) const {
        return cells.at(static_cast<size_t>(u) * n + v);
    }
    Rat eval(int u, int v, const Rat& theta) const;
};

// Entry (u,v) = number of edges u -> v; requires an ordinary graph.
CountMatrix adjacency(const LabeledGraph& g);

constexpr double kDefaultTol = 1e-9;

// Perron eigenvalue within absolute error tol.  Reducible matrices are
// handled as the max over strongly connected components; the zero matrix
// yields 0.  Power iteration is capped at 1e6 rounds.
double spectral_radius(const CountMatrix& a, double tol = kDefaultTol);

// log2 of the spectral radius of the adjacency matrix; the graph must be
// ordinary and deterministic (losslessness is not checked).
double capacity_ordinary(const LabeledGraph& g, double tol = kDefaultTol);

// Largest theta with lambda(A_H(theta)) = 1, found by bisection with an
// exact rational sign test at each endpoint; requires deterministic
// irreducible input.
double theta_max(const LabeledGraph& h, double tol = kDefaultTol);

// Exact predicate lambda(A_H(theta)) >= 1 at rational theta.
bool theta_lambda_at_least_one(const ThetaMatrix& m, const Rat& theta);

}  // namespace vle

#endif
