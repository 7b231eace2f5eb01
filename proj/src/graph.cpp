#include "vle/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace vle {

LabeledGraph::LabeledGraph(std::vector<std::string> states, std::vector<Edge> edges,
                           ParityAlphabet alphabet)
    : states_(std::move(states)), edges_(std::move(edges)), alphabet_(std::move(alphabet)) {
    if (states_.empty()) throw Error("graph: no states");
    std::set<std::string> seen(states_.begin(), states_.end());
    if (seen.size() != states_.size()) throw Error("graph: duplicate state names");
    out_.assign(states_.size(), {});
    int n = state_count();
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
            throw Error("graph: edge endpoint out of range");
        if (e.label.empty()) throw Error("graph: empty edge label");
        for (int32_t s : e.label)
            if (s < 0 || s >= alphabet_.size()) throw Error("graph: label symbol out of range");
        out_[e.from].push_back(static_cast<int>(i));
    }
}

int LabeledGraph::state_index(const std::string& name) const {
    auto it = std::find(states_.begin(), states_.end(), name);
    return it == states_.end() ? -1 : static_cast<int>(it - states_.begin());
}

bool LabeledGraph::is_ordinary() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.label.size() == 1; });
}

int LabeledGraph::max_edge_length() const {
    int m = 0;
    for (const Edge& e : edges_) m = std::max(m, static_cast<int>(e.label.size()));
    return m;
}

LabeledGraph LabeledGraph::with_partition(const std::vector<std::string>& odd_symbols) const {
    return LabeledGraph(states_, edges_, ParityAlphabet(alphabet_.symbols(), odd_symbols));
}

int LengthDistribution::support() const {
    for (int ell = static_cast<int>(std::max(eta.size(), omega.size())); ell >= 1; --ell) {
        Int e = ell <= static_cast<int>(eta.size()) ? eta[ell - 1] : Int(0);
        Int o = ell <= static_cast<int>(omega.size()) ? omega[ell - 1] : Int(0);
        if (e + o != 0) return ell;
    }
    throw Error("length distribution: all-zero pair has no support");
}

bool LengthDistribution::all_zero() const {
    auto z = [](const std::vector<Int>& v) {
        return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
    };
    return z(eta) && z(omega);
}

bool LengthDistribution::nonnegative() const {
    auto ok = [](const std::vector<Int>& v) {
        return std::all_of(v.begin(), v.end(), [](const Int& x) { return x >= 0; });
    };
    return ok(eta) && ok(omega);
}

Int LengthDistribution::mu(int ell) const {
    Int e = ell >= 1 && ell <= static_cast<int>(eta.size()) ? eta[ell - 1] : Int(0);
    Int o = ell >= 1 && ell <= static_cast<int>(omega.size()) ? omega[ell - 1] : Int(0);
    return e + o;
}

bool LengthDistribution::operator==(const LengthDistribution& o) const {
    auto get = [](const std::vector<Int>& v, size_t i) {
        return i < v.size() ? v[i] : Int(0);
    };
    size_t n = std::max(std::max(eta.size(), omega.size()),
                        std::max(o.eta.size(), o.omega.size()));
    for (size_t i = 0; i < n; ++i)
        if (get(eta, i) != get(o.eta, i) || get(omega, i) != get(o.omega, i)) return false;
    return true;
}

bool is_deterministic(const LabeledGraph& g) {
    for (int u = 0; u < g.state_count(); ++u) {
        std::vector<Word> labels;
        for (int ei : g.out_edges(u)) labels.push_back(g.edges()[ei].label);
        std::sort(labels.begin(), labels.end());
        // In sorted order a prefix is adjacent to some extension of it.
        for (size_t i = 0; i + 1 < labels.size(); ++i) {
            const Word& a = labels[i];
            const Word& b = labels[i + 1];
            if (a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin())) return false;
        }
    }
    return true;
}

namespace {

// Tarjan strongly connected components; returns component id per state.
struct SccResult {
    std::vector<int> comp;
    int count = 0;
};

SccResult scc_of(const LabeledGraph& g) {
    int n = g.state_count();
    SccResult res;
    res.comp.assign(n, -1);
    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<bool> on_stack(n, false);
    int next_index = 0;
    // Iterative Tarjan to keep deep graphs off the call stack.
    struct Frame {
        int v;
        size_t ei;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.ei < g.out_edges(f.v).size()) {
                int w = g.edges()[g.out_edges(f.v)[f.ei++]].to;
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
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
                        res.comp[w] = res.count;
                    } while (w != f.v);
                    ++res.count;
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }
    return res;
}

}  // namespace

bool is_irreducible(const LabeledGraph& g) {
    if (g.state_count() == 1) {
        return !g.out_edges(0).empty();  // singleton needs a self-loop
    }
    return scc_of(g).count == 1;
}

LabeledGraph graph_power(const LabeledGraph& g, int t) {
    if (t <= 0) throw Error("graph_power: t must be positive");
    if (!g.is_ordinary()) throw Error("graph_power: input must be ordinary");
    const int k = g.alphabet().size();
    double total = 1;
    for (int i = 0; i < t; ++i) {
        total *= k;
        if (total > 65536) throw Error("graph_power: product alphabet too large");
    }
    // Product alphabet Sigma^t, component-lexicographic; odd = odd word parity.
    int count = static_cast<int>(total);
    std::vector<std::string> symbols(count);
    std::vector<std::string> odd;
    bool single_char = true;
    for (int i = 0; i < k; ++i) single_char &= g.alphabet().symbol(i).size() == 1;
    for (int code = 0; code < count; ++code) {
        int c = code, parity = 0;
        std::vector<int> comp(t);
        for (int j = t - 1; j >= 0; --j) {
            comp[j] = c % k;
            c /= k;
        }
        std::string name;
        for (int j = 0; j < t; ++j) {
            if (j > 0 && !single_char) name += '.';
            name += g.alphabet().symbol(comp[j]);
            parity ^= g.alphabet().is_odd(comp[j]) ? 1 : 0;
        }
        symbols[code] = name;
        if (parity) odd.push_back(name);
    }
    ParityAlphabet product(symbols, odd);

    std::vector<Edge> edges;
    // One edge per length-t path, explored in input edge order.
    struct Pos {
        int state;
        int code;
        int depth;
    };
    for (int u = 0; u < g.state_count(); ++u) {
        std::vector<Pos> stack{{u, 0, 0}};
        while (!stack.empty()) {
            Pos p = stack.back();
            stack.pop_back();
            if (p.depth == t) {
                edges.push_back({u, p.state, Word{p.code}});
                continue;
            }
            const auto& outs = g.out_edges(p.state);
            // Reverse push so paths emerge in edge input order.
            for (auto it = outs.rbegin(); it != outs.rend(); ++it) {
                const Edge& e = g.edges()[*it];
                stack.push_back({e.to, p.code * k + e.label[0], p.depth + 1});
            }
        }
    }
    return LabeledGraph(g.states(), std::move(edges), std::move(product));
}

ExpandedVlg expand_vlg(const LabeledGraph& h) {
    ExpandedVlg out;
    std::vector<std::string> states = h.states();
    std::vector<int> origin_state(states.size());
    std::vector<int> origin_edge(states.size(), -1);
    for (size_t i = 0; i < states.size(); ++i) origin_state[i] = static_cast<int>(i);

    std::set<std::string> used(states.begin(), states.end());
    auto fresh = [&](const std::string& base) {
        std::string name = base;
        while (used.count(name)) name += "'";
        used.insert(name);
        return name;
    };

    std::vector<Edge> edges;
    for (size_t ei = 0; ei < h.edges().size(); ++ei) {
        const Edge& e = h.edges()[ei];
        int prev = e.from;
        for (size_t k = 0; k + 1 < e.label.size(); ++k) {
            std::string name =
                fresh(h.state_name(e.from) + "_e" + std::to_string(ei) + "_" + std::to_string(k + 1));
            int dummy = static_cast<int>(states.size());
            states.push_back(name);
            origin_state.push_back(-1);
            origin_edge.push_back(static_cast<int>(ei));
            edges.push_back({prev, dummy, Word{e.label[k]}});
            prev = dummy;
        }
        edges.push_back({prev, e.to, Word{e.label.back()}});
    }
    out.graph = LabeledGraph(std::move(states), std::move(edges), h.alphabet());
    out.origin_state = std::move(origin_state);
    out.origin_edge = std::move(origin_edge);
    return out;
}

LabeledGraph reduce_to_shannon_cover(const LabeledGraph& g) {
    if (!g.is_ordinary()) throw Error("reduce: input must be ordinary");
    if (!is_deterministic(g)) throw Error("reduce: input must be deterministic");
    if (!is_irreducible(g)) throw Error("reduce: input must be irreducible");

    int n = g.state_count();
    std::vector<int> cls(n, 0);
    int classes = 1;
    // Moore refinement on (symbol -> class of successor) signatures.
    for (;;) {
        std::map<std::pair<int, std::vector<std::pair<int, int>>>, int> sig_to_class;
        std::vector<int> next(n);
        for (int u = 0; u < n; ++u) {
            std::vector<std::pair<int, int>> sig;
            for (int ei : g.out_edges(u)) {
                const Edge& e = g.edges()[ei];
                sig.emplace_back(e.label[0], cls[e.to]);
            }
            std::sort(sig.begin(), sig.end());
            auto key = std::make_pair(cls[u], sig);
            auto [it, fresh_class] = sig_to_class.try_emplace(key, -1);
            if (fresh_class) it->second = static_cast<int>(sig_to_class.size()) - 1;
            next[u] = it->second;
        }
        int next_classes = static_cast<int>(sig_to_class.size());
        if (next_classes == classes) break;
        cls = next;
        classes = next_classes;
    }

    // Renumber classes by first member, keep that member's name.
    std::vector<int> repr(classes, -1), order;
    for (int u = 0; u < n; ++u)
        if (repr[cls[u]] == -1) {
            repr[cls[u]] = u;
            order.push_back(cls[u]);
        }
    std::vector<int> newid(classes);
    for (size_t i = 0; i < order.size(); ++i) newid[order[i]] = static_cast<int>(i);

    std::vector<std::string> states(classes);
    for (int c = 0; c < classes; ++c) states[newid[c]] = g.state_name(repr[c]);
    std::vector<Edge> edges;
    std::set<std::tuple<int, int, Word>> dedup;
    for (const Edge& e : g.edges()) {
        // Representative states carry the merged out-neighborhood.
        if (repr[cls[e.from]] != e.from) continue;
        Edge ne{newid[cls[e.from]], newid[cls[e.to]], e.label};
        if (dedup.insert({ne.from, ne.to, ne.label}).second) edges.push_back(ne);
    }
    return LabeledGraph(std::move(states), std::move(edges), g.alphabet());
}

LabeledGraph parity_subgraph(const LabeledGraph& g, int b) {
    if (b != 0 && b != 1) throw Error("parity_subgraph: b must be 0 or 1");
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (parity_of_word(e.label, g.alphabet()) == b) edges.push_back(e);
    return LabeledGraph(g.states(), std::move(edges), g.alphabet());
}

LabeledGraph induced_subgraph(const LabeledGraph& g, const std::vector<int>& keep) {
    if (keep.empty()) throw Error("induced_subgraph: empty state set");
    std::vector<bool> in(g.state_count(), false);
    for (int u : keep) {
        if (u < 0 || u >= g.state_count()) throw Error("induced_subgraph: state out of range");
        in[u] = true;
    }
    std::vector<int> newid(g.state_count(), -1);
    std::vector<std::string> states;
    for (int u = 0; u < g.state_count(); ++u) {
        if (in[u]) {
            newid[u] = static_cast<int>(states.size());
            states.push_back(g.state_name(u));
        }
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (in[e.from] && in[e.to]) edges.push_back({newid[e.from], newid[e.to], e.label});
    return LabeledGraph(std::move(states), std::move(edges), g.alphabet());
}

LengthDistribution out_length_distribution(const LabeledGraph& g, int u) {
    if (u < 0 || u >= g.state_count()) throw Error("out_length_distribution: unknown state");
    LengthDistribution d;
    for (int ei : g.out_edges(u)) {
        const Edge& e = g.edges()[ei];
        int ell = static_cast<int>(e.label.size());
        if (static_cast<int>(d.eta.size()) < ell) {
            d.eta.resize(ell, 0);
            d.omega.resize(ell, 0);
        }
        if (parity_of_word(e.label, g.alphabet()) == 0)
            d.eta[ell - 1] += 1;
        else
            d.omega[ell - 1] += 1;
    }
    return d;
}

}  // namespace vle
