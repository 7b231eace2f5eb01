#include "vle/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vle {

CountMatrix CountMatrix::operator*(const CountMatrix& o) const {
    if (n_ != o.n_) throw Error("matrix: dimension mismatch");
    CountMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

CountMatrix CountMatrix::identity(int n) {
    CountMatrix r(n);
    for (int i = 0; i < n; ++i) r.at(i, i) = 1;
    return r;
}

CountMatrix CountMatrix::pow(int t) const {
    if (t < 0) throw Error("matrix: negative power");
    CountMatrix r = identity(n_);
    CountMatrix b = *this;
    while (t > 0) {
        if (t & 1) r = r * b;
        b = b * b;
        t >>= 1;
    }
    return r;
}

CountMatrix adjacency(const LabeledGraph& g) {
    if (!g.is_ordinary()) throw Error("adjacency: input must be ordinary");
    CountMatrix a(g.state_count());
    for (const Edge& e : g.edges()) a.at(e.from, e.to) += 1;
    return a;
}

ThetaMatrix ThetaMatrix::of(const LabeledGraph& h) {
    ThetaMatrix m;
    m.n = h.state_count();
    m.cells.assign(static_cast<size_t>(m.n) * m.n, {});
    for (const Edge& e : h.edges())
        m.cells[static_cast<size_t>(e.from) * m.n + e.to][static_cast<int>(e.label.size())] += 1;
    return m;
}

Rat ThetaMatrix::eval(int u, int v, const Rat& theta) const {
    Rat sum = 0;
    for (const auto& [len, mult] : cell(u, v)) {
        Rat p = 1;
        for (int i = 0; i < len; ++i) p *= theta;
        sum += Rat(mult) / p;
    }
    return sum;
}

namespace {

// Collatz-Wielandt enclosure on B = A_scc + I (primitive for irreducible A):
// min_i (Bx)_i/x_i <= lambda(B) <= max_i (Bx)_i/x_i for positive x.
double perron_irreducible(const std::vector<std::vector<double>>& a, double tol) {
    size_t n = a.size();
    std::vector<double> x(n, 1.0), y(n);
    for (long iter = 0; iter < 1000000; ++iter) {
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (size_t i = 0; i < n; ++i) {
            double s = x[i];  // the +I term
            for (size_t j = 0; j < n; ++j) s += a[i][j] * x[j];
            y[i] = s;
            double ratio = s / x[i];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        if (hi - lo <= tol) return (lo + hi) / 2.0 - 1.0;
        double norm = *std::max_element(y.begin(), y.end());
        for (size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    }
    throw Error("spectral_radius: power iteration did not converge in 1e6 rounds");
}

// Component ids via Tarjan on the matrix support.
std::vector<int> matrix_scc(const CountMatrix& a, int& count) {
    int n = a.dim();
    std::vector<int> comp(n, -1), index(n, -1), low(n, 0), stack;
    std::vector<bool> on_stack(n, false);
    count = 0;
    int next = 0;
    struct Frame {
        int v;
        int j;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = next++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.j < n) {
                int w = f.j++;
                if (a.at(f.v, w) == 0) continue;
                if (index[w] == -1) {
                    index[w] = low[w] = next++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = count;
                    } while (w != f.v);
                    ++count;
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }
    return comp;
}

}  // namespace

double spectral_radius(const CountMatrix& a, double tol) {
    if (tol <= 0) throw Error("spectral_radius: tol must be positive");
    int count = 0;
    std::vector<int> comp = matrix_scc(a, count);
    double best = 0.0;
    for (int c = 0; c < count; ++c) {
        std::vector<int> members;
        for (int i = 0; i < a.dim(); ++i)
            if (comp[i] == c) members.push_back(i);
        if (members.size() == 1 && a.at(members[0], members[0]) == 0) continue;
        std::vector<std::vector<double>> sub(members.size(), std::vector<double>(members.size()));
        for (size_t i = 0; i < members.size(); ++i)
            for (size_t j = 0; j < members.size(); ++j)
                sub[i][j] = static_cast<double>(a.at(members[i], members[j]));
        best = std::max(best, perron_irreducible(sub, tol));
    }
    return best;
}

double capacity_ordinary(const LabeledGraph& g, double tol) {
    if (!g.is_ordinary()) throw Error("capacity: input must be ordinary");
    if (!is_deterministic(g)) throw Error("capacity: input must be deterministic");
    return std::log2(spectral_radius(adjacency(g), tol));
}

bool theta_lambda_at_least_one(const ThetaMatrix& m, const Rat& theta) {
    // lambda(B) < 1 for nonnegative B iff I - B is a nonsingular M-matrix,
    // i.e. all leading principal minors of I - B are positive.  Gaussian
    // elimination without pivoting exposes the minors as pivot products.
    int n = m.n;
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            w[i][j] = -m.eval(i, j, theta);
            if (i == j) w[i][j] += 1;
        }
    for (int k = 0; k < n; ++k) {
        if (w[k][k] <= 0) return true;  // some leading minor <= 0
        for (int i = k + 1; i < n; ++i) {
            if (w[i][k] == 0) continue;
            Rat f = w[i][k] / w[k][k];
            for (int j = k; j < n; ++j) w[i][j] -= f * w[k][j];
        }
    }
    return false;
}

double theta_max(const LabeledGraph& h, double tol) {
    if (tol <= 0) throw Error("theta_max: tol must be positive");
    if (!is_deterministic(h)) throw Error("theta_max: input must be deterministic");
    if (!is_irreducible(h)) throw Error("theta_max: input must be irreducible");
    ThetaMatrix m = ThetaMatrix::of(h);

    Int max_out = 0;
    for (int u = 0; u < h.state_count(); ++u)
        max_out = std::max(max_out, Int(h.out_edges(u).size()));
    Rat lo = 1;             // lambda(A_H(1)) >= 1 for irreducible graphs
    Rat hi = 1 + max_out;   // row sums < 1, so lambda < 1
    if (!theta_lambda_at_least_one(m, lo)) throw Error("theta_max: no root above 1");
    if (theta_lambda_at_least_one(m, hi)) throw Error("theta_max: bracket failed");
    // theta -> lambda(A_H(theta)) is strictly decreasing on irreducible input,
    // so plain bisection on the exact predicate converges to theta_max.
    Rat width_target(tol);
    width_target /= 4;
    while (hi - lo > width_target) {
        Rat mid = (lo + hi) / 2;
        if (theta_lambda_at_least_one(m, mid))
            lo = mid;
        else
            hi = mid;
    }
    Rat mid = (lo + hi) / 2;
    return static_cast<double>(numerator(mid)) / static_cast<double>(denominator(mid));
}

}  // namespace vle
