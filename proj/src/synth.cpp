#include "vle/synth.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <set>

namespace vle {

namespace {

void require_search_input(const LabeledGraph& g) {
    if (!g.is_ordinary()) throw Error("principal search: input must be ordinary");
    if (!is_deterministic(g)) throw Error("principal search: input must be deterministic");
    if (!is_irreducible(g)) throw Error("principal search: input must be irreducible");
}

Rat rat_pow_inv(const Int& n, int ell) { return Rat(1) / Rat(ipow(n, ell)); }

}  // namespace

PrincipalResult ordinary_principal_states(const LabeledGraph& g, const Int& n, int r) {
    require_search_input(g);
    if (n < 1) throw Error("ordinary_principal_states: n must be positive");
    if (r < 1) throw Error("ordinary_principal_states: r must be positive");

    int nv = g.state_count();
    std::vector<bool> in(nv, true);
    // c[t][s]: maximal Kraft mass over prefix-free path sets from s of length
    // <= t whose terminals lie in the surviving set.
    std::vector<std::vector<Rat>> c;
    auto compute = [&]() {
        c.assign(r + 1, std::vector<Rat>(nv, Rat(0)));
        for (int t = 1; t <= r; ++t)
            for (int s = 0; s < nv; ++s) {
                Rat sum = 0;
                for (int ei : g.out_edges(s)) {
                    const Edge& e = g.edges()[ei];
                    Rat best = c[t - 1][e.to];
                    if (in[e.to] && best < 1) best = 1;
                    sum += best;
                }
                c[t][s] = sum / Rat(n);
            }
    };

    for (;;) {
        compute();
        bool changed = false;
        for (int s = 0; s < nv; ++s)
            if (in[s] && c[r][s] < 1) {
                in[s] = false;
                changed = true;
            }
        if (!changed) break;
    }

    PrincipalResult res;
    for (int s = 0; s < nv; ++s)
        if (in[s]) res.principal_set.push_back(s);
    if (res.principal_set.empty()) {
        res.status = SearchStatus::none;
        res.note = "no principal set for r = " + std::to_string(r);
        return res;
    }
    res.status = SearchStatus::found;

    // Witness traceback; cut preferred over expansion on ties so the shortest
    // realization is reported.
    auto build = [&](auto&& self, int s, int t, const Word& prefix, StateCut& cut) -> void {
        for (int ei : g.out_edges(s)) {
            const Edge& e = g.edges()[ei];
            Word w = prefix;
            w.insert(w.end(), e.label.begin(), e.label.end());
            Rat expand = t >= 1 ? c[t - 1][e.to] : Rat(0);
            bool can_cut = in[e.to];
            if (can_cut && expand <= 1) {
                cut.words.push_back(w);
                cut.terminals.push_back(e.to);
            } else if (expand > (can_cut ? Rat(1) : Rat(0))) {
                self(self, e.to, t - 1, w, cut);
            }
        }
    };
    for (int u : res.principal_set) {
        StateCut cut;
        build(build, u, r, Word{}, cut);
        // Report: k_plus holds K_l(mu, n); verdict is the mass test.
        int rr = 0;
        for (const Word& w : cut.words) rr = std::max(rr, static_cast<int>(w.size()));
        std::vector<Int> mu(rr, 0);
        for (const Word& w : cut.words) mu[w.size() - 1] += 1;
        KraftReport rep;
        for (int ell = 1; ell <= rr; ++ell) rep.k_plus.push_back(kraft_functional(mu, n, ell));
        rep.condition_a = rep.k_plus.back() <= 0;
        rep.verdict = rep.condition_a;
        res.reports[u] = std::move(rep);
        res.cuts[u] = std::move(cut);
    }
    return res;
}

namespace {

// Distribution keys are interleaved count vectors (eta_1, omega_1, ...,
// eta_r, omega_r); the canonical choice among passing keys is the
// lexicographic maximum, which concentrates mass at short lengths.
using DistKey = std::vector<int>;

DistKey zero_key(int r) { return DistKey(2 * r, 0); }

bool key_is_zero(const DistKey& k) {
    return std::all_of(k.begin(), k.end(), [](int v) { return v == 0; });
}

DistKey key_add(const DistKey& a, const DistKey& b) {
    DistKey r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

bool key_leq(const DistKey& a, const DistKey& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

DistKey key_sub(const DistKey& a, const DistKey& b) {
    DistKey r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

// Shift a relative distribution one edge deeper: lengths grow by 1 and
// parities flip by the edge parity.
DistKey key_shift(const DistKey& k, int edge_parity, int r) {
    DistKey out = zero_key(r);
    for (int ell = 1; ell < r; ++ell)
        for (int p = 0; p <= 1; ++p) {
            int v = k[2 * (ell - 1) + p];
            if (v) out[2 * ell + (p ^ edge_parity)] += v;
        }
    return out;
}

LengthDistribution key_to_dist(const DistKey& k, int r) {
    LengthDistribution d;
    d.eta.assign(r, 0);
    d.omega.assign(r, 0);
    for (int ell = 1; ell <= r; ++ell) {
        d.eta[ell - 1] = k[2 * (ell - 1)];
        d.omega[ell - 1] = k[2 * (ell - 1) + 1];
    }
    return d;
}

struct BudgetExceeded {};

struct SubsetContext {
    const LabeledGraph* g = nullptr;
    int r = 0;
    int n0 = 0, n1 = 0;
    std::vector<bool> in;  // candidate subset membership
    long long work = 0;
    long long max_work = 0;

    struct Node {
        bool ready = false;
        std::vector<std::vector<DistKey>> edge_options;  // per out-edge, sorted desc
        std::vector<std::set<DistKey>> suffix;           // Minkowski of edges i..end
    };
    // memo[s * (r+1) + m]
    std::vector<Node> memo;

    const Node& node(int s, int m) {
        Node& nd = memo[static_cast<size_t>(s) * (r + 1) + m];
        if (nd.ready) return nd;
        const auto& outs = g->out_edges(s);
        nd.edge_options.resize(outs.size());
        for (size_t i = 0; i < outs.size(); ++i) {
            const Edge& e = g->edges()[outs[i]];
            int p = parity_of_word(e.label, g->alphabet());
            std::set<DistKey> opts;
            opts.insert(zero_key(r));
            if (in[e.to]) {
                DistKey dirac = zero_key(r);
                dirac[p] = 1;
                opts.insert(dirac);
            }
            if (m >= 2) {
                const Node& child = node(e.to, m - 1);
                const std::set<DistKey>& sub =
                    child.suffix.empty() ? std::set<DistKey>{zero_key(r)} : child.suffix[0];
                for (const DistKey& k : sub) {
                    if (key_is_zero(k)) continue;
                    opts.insert(key_shift(k, p, r));
                }
            }
            nd.edge_options[i].assign(opts.begin(), opts.end());
            std::reverse(nd.edge_options[i].begin(), nd.edge_options[i].end());
        }
        nd.suffix.assign(outs.size() + 1, {});
        nd.suffix[outs.size()].insert(zero_key(r));
        for (int i = static_cast<int>(outs.size()) - 1; i >= 0; --i) {
            for (const DistKey& a : nd.suffix[i + 1])
                for (const DistKey& b : nd.edge_options[i]) {
                    nd.suffix[i].insert(key_add(a, b));
                    if (++work > max_work) throw BudgetExceeded{};
                }
        }
        nd.ready = true;
        return nd;
    }

    // Reconstructs a cut realizing `target`, walking edges in input order and
    // taking the lexicographically largest feasible option each time.
    void realize(int s, int m, const DistKey& target, const Word& prefix, StateCut& cut) {
        const Node& nd = node(s, m);
        DistKey rest = target;
        const auto& outs = g->out_edges(s);
        for (size_t i = 0; i < outs.size(); ++i) {
            const Edge& e = g->edges()[outs[i]];
            int p = parity_of_word(e.label, g->alphabet());
            for (const DistKey& o : nd.edge_options[i]) {
                if (!key_leq(o, rest)) continue;
                DistKey next = key_sub(rest, o);
                if (!nd.suffix[i + 1].count(next)) continue;
                if (!key_is_zero(o)) {
                    Word w = prefix;
                    w.insert(w.end(), e.label.begin(), e.label.end());
                    DistKey dirac = zero_key(r);
                    dirac[p] = 1;
                    if (o == dirac) {
                        cut.words.push_back(w);
                        cut.terminals.push_back(e.to);
                    } else {
                        // Un-shift and descend.
                        DistKey sub = zero_key(r);
                        for (int ell = 2; ell <= r; ++ell)
                            for (int q = 0; q <= 1; ++q)
                                sub[2 * (ell - 2) + (q ^ p)] = o[2 * (ell - 1) + q];
                        realize(e.to, m - 1, sub, w, cut);
                    }
                }
                rest = next;
                break;
            }
        }
        if (!key_is_zero(rest)) throw Error("pp search: realization failed (internal)");
    }
};

PPStateCheck evaluate_pp(const LengthDistribution& d, int n0, int n1) {
    PPStateCheck chk;
    if (d.all_zero()) return chk;  // no mass, cannot pass
    int r = d.support();
    std::vector<Int> plus(r), minus(r);
    for (int ell = 1; ell <= r; ++ell) {
        Int e = ell <= static_cast<int>(d.eta.size()) ? d.eta[ell - 1] : Int(0);
        Int o = ell <= static_cast<int>(d.omega.size()) ? d.omega[ell - 1] : Int(0);
        plus[ell - 1] = e + o;
        minus[ell - 1] = e - o;
    }
    for (int ell = 1; ell <= r; ++ell) {
        chk.report.k_plus.push_back(kraft_functional(plus, n0 + n1, ell));
        chk.report.k_minus.push_back(kraft_functional(minus, n0 - n1, ell));
    }
    chk.c1 = chk.report.k_plus.back() <= -abs(chk.report.k_minus.back());
    for (int ell = 1; ell < r; ++ell)
        if (chk.report.k_plus[ell - 1] < abs(chk.report.k_minus[ell - 1]))
            chk.c2_failures.push_back(ell);
    chk.report.condition_a = chk.report.k_plus.back() == 0;
    chk.report.condition_b_failures = chk.c2_failures;
    chk.pass = chk.c1 && chk.c2_failures.empty();
    chk.report.verdict = chk.pass;
    return chk;
}

// Number of paths of length <= r from each state; Int to survive blowups.
Int tree_size(const LabeledGraph& g, int u, int r) {
    std::vector<Int> cnt(g.state_count(), 0);
    cnt[u] = 1;
    Int total = 1;
    for (int d = 1; d <= r; ++d) {
        std::vector<Int> next(g.state_count(), 0);
        for (int s = 0; s < g.state_count(); ++s) {
            if (cnt[s] == 0) continue;
            for (int ei : g.out_edges(s)) next[g.edges()[ei].to] += cnt[s];
        }
        for (const Int& v : next) total += v;
        cnt = std::move(next);
    }
    return total;
}

struct SubsetEval {
    bool passed = false;
    bool inconclusive = false;
    int failing_state = -1;
    std::map<int, DistKey> chosen;
    std::map<int, PPStateCheck> checks;
};

SubsetEval evaluate_subset(const LabeledGraph& g, const std::vector<int>& subset, int n0,
                           int n1, int r, long long max_work) {
    SubsetEval ev;
    SubsetContext ctx;
    ctx.g = &g;
    ctx.r = r;
    ctx.n0 = n0;
    ctx.n1 = n1;
    ctx.max_work = max_work;
    ctx.in.assign(g.state_count(), false);
    for (int u : subset) ctx.in[u] = true;
    ctx.memo.assign(static_cast<size_t>(g.state_count()) * (r + 1), {});
    try {
        for (int u : subset) {
            const auto& root = ctx.node(u, r);
            const std::set<DistKey>& achievable =
                root.suffix.empty() ? std::set<DistKey>{zero_key(r)} : root.suffix[0];
            bool found = false;
            DistKey best;
            PPStateCheck best_chk;
            // std::set iterates ascending; the last passing key is the
            // lexicographic maximum.
            for (const DistKey& k : achievable) {
                if (key_is_zero(k)) continue;
                PPStateCheck chk = evaluate_pp(key_to_dist(k, r), n0, n1);
                if (chk.pass) {
                    found = true;
                    best = k;
                    best_chk = std::move(chk);
                }
            }
            if (!found) {
                ev.failing_state = u;
                return ev;
            }
            ev.chosen[u] = best;
            ev.checks[u] = std::move(best_chk);
        }
        ev.passed = true;
    } catch (const BudgetExceeded&) {
        ev.inconclusive = true;
    }
    return ev;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace

PPCheckResult pp_principal_check(const LabeledGraph& h, const std::vector<int>& keep,
                                 int n0, int n1) {
    if (keep.empty()) throw Error("pp_principal_check: empty state set");
    if (n0 < 1 || n1 < 1) throw Error("pp_principal_check: n0, n1 must be positive");
    LabeledGraph sub = induced_subgraph(h, keep);
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    PPCheckResult res;
    res.all_pass = true;
    for (size_t i = 0; i < sorted.size(); ++i) {
        LengthDistribution d = out_length_distribution(sub, static_cast<int>(i));
        PPStateCheck chk = evaluate_pp(d, n0, n1);
        res.all_pass = res.all_pass && chk.pass;
        res.states[sorted[i]] = std::move(chk);
    }
    return res;
}

PrincipalResult pp_principal_search(const LabeledGraph& g, int n0, int n1, int r,
                                    SearchOptions* opts) {
    require_search_input(g);
    if (n0 < 1 || n1 < 1) throw Error("pp_principal_search: n0, n1 must be positive");
    if (r < 1) throw Error("pp_principal_search: r must be positive");
    SearchOptions local;
    SearchOptions& o = opts ? *opts : local;

    PrincipalResult res;
    if (r > o.max_r) {
        res.status = SearchStatus::inconclusive;
        res.note = "inconclusive within budget: r = " + std::to_string(r) +
                   " exceeds configured max_r = " + std::to_string(o.max_r);
        return res;
    }
    for (int u = 0; u < g.state_count(); ++u) {
        if (tree_size(g, u, r) > o.max_tree_nodes) {
            res.status = SearchStatus::inconclusive;
            res.note = "inconclusive within budget: path tree at state " + g.state_name(u) +
                       " exceeds " + std::to_string(o.max_tree_nodes) + " nodes";
            return res;
        }
    }

    bool any_inconclusive = false;
    int nv = g.state_count();
    for (int size = nv; size >= 1; --size) {
        std::vector<std::vector<int>> subsets = subsets_of_size(nv, size);
        std::vector<SubsetEval> evals(subsets.size());
        if (o.parallel) {
            std::vector<std::future<SubsetEval>> futs;
            futs.reserve(subsets.size());
            for (const auto& s : subsets)
                futs.push_back(std::async(std::launch::async, [&, s]() {
                    return evaluate_subset(g, s, n0, n1, r, o.max_work);
                }));
            for (size_t i = 0; i < futs.size(); ++i) evals[i] = futs[i].get();
        } else {
            for (size_t i = 0; i < subsets.size(); ++i)
                evals[i] = evaluate_subset(g, subsets[i], n0, n1, r, o.max_work);
        }
        for (size_t i = 0; i < subsets.size(); ++i) {
            SubsetEval& ev = evals[i];
            any_inconclusive = any_inconclusive || ev.inconclusive;
            if (o.collect_survey)
                o.survey.push_back({subsets[i], ev.passed, ev.inconclusive, ev.failing_state});
            if (!ev.passed) continue;
            // First passing subset in canonical order wins.
            res.status = SearchStatus::found;
            res.principal_set = subsets[i];
            SubsetContext ctx;
            ctx.g = &g;
            ctx.r = r;
            ctx.n0 = n0;
            ctx.n1 = n1;
            ctx.max_work = o.max_work;
            ctx.in.assign(nv, false);
            for (int u : subsets[i]) ctx.in[u] = true;
            ctx.memo.assign(static_cast<size_t>(nv) * (r + 1), {});
            for (int u : subsets[i]) {
                StateCut cut;
                ctx.realize(u, r, ev.chosen[u], Word{}, cut);
                res.cuts[u] = std::move(cut);
                res.reports[u] = ev.checks[u].report;
            }
            if (!o.collect_survey) return res;
        }
        if (res.status == SearchStatus::found) return res;
    }
    if (res.status != SearchStatus::found) {
        res.status = any_inconclusive ? SearchStatus::inconclusive : SearchStatus::none;
        res.note = any_inconclusive
                       ? "inconclusive within budget (work limit hit on some subsets)"
                       : "no parity-preserving principal set for r <= " + std::to_string(r);
    }
    return res;
}

LabeledGraph cut_subgraph(const LabeledGraph& g, const PrincipalResult& pr) {
    if (pr.status != SearchStatus::found || pr.principal_set.empty())
        throw Error("cut_subgraph: no principal set");
    std::vector<int> local(g.state_count(), -1);
    std::vector<std::string> states;
    for (int u : pr.principal_set) {
        local[u] = static_cast<int>(states.size());
        states.push_back(g.state_name(u));
    }
    std::vector<Edge> edges;
    for (int u : pr.principal_set) {
        const StateCut& cut = pr.cuts.at(u);
        for (size_t i = 0; i < cut.words.size(); ++i) {
            int v = cut.terminals[i];
            if (local[v] < 0) throw Error("cut_subgraph: terminal outside principal set");
            edges.push_back({local[u], local[v], cut.words[i]});
        }
    }
    return LabeledGraph(std::move(states), std::move(edges), g.alphabet());
}

namespace {

// Removal order: longest first, lexicographically largest label first.
std::vector<int> removal_order(const LabeledGraph& h, int u) {
    std::vector<int> order = h.out_edges(u);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Word& wa = h.edges()[a].label;
        const Word& wb = h.edges()[b].label;
        if (wa.size() != wb.size()) return wa.size() > wb.size();
        return wa > wb;
    });
    return order;
}

LabeledGraph drop_edges(const LabeledGraph& h, const std::set<int>& removed) {
    std::vector<Edge> edges;
    for (size_t i = 0; i < h.edges().size(); ++i)
        if (!removed.count(static_cast<int>(i))) edges.push_back(h.edges()[i]);
    return LabeledGraph(h.states(), std::move(edges), h.alphabet());
}

}  // namespace

EncoderCandidate trim_ordinary(const LabeledGraph& h, const Int& n) {
    if (n < 1) throw Error("trim_ordinary: n must be positive");
    std::set<int> removed;
    std::map<std::string, TrimEntry> log;
    for (int u = 0; u < h.state_count(); ++u) {
        Rat mass = 0;
        for (int ei : h.out_edges(u))
            mass += rat_pow_inv(n, static_cast<int>(h.edges()[ei].label.size()));
        if (mass < 1)
            throw Error("trim_ordinary: state " + h.state_name(u) + " has Kraft mass < 1");
        Rat excess = mass - 1;
        TrimEntry entry{0, 0};
        for (int ei : removal_order(h, u)) {
            if (excess == 0) break;
            const Edge& e = h.edges()[ei];
            removed.insert(ei);
            excess -= rat_pow_inv(n, static_cast<int>(e.label.size()));
            if (parity_of_word(e.label, h.alphabet()) == 0)
                entry.even_removed += 1;
            else
                entry.odd_removed += 1;
        }
        if (excess != 0) throw Error("trim_ordinary: could not reach Kraft equality (internal)");
        log[h.state_name(u)] = entry;
    }
    EncoderCandidate cand;
    cand.graph = drop_edges(h, removed);
    cand.trim_log = std::move(log);
    cand.source.status = SearchStatus::found;
    for (int u = 0; u < h.state_count(); ++u) cand.source.principal_set.push_back(u);
    return cand;
}

EncoderCandidate trim_pp(const LabeledGraph& h, int n0, int n1) {
    std::vector<int> all(h.state_count());
    for (int u = 0; u < h.state_count(); ++u) all[u] = u;
    PPCheckResult chk = pp_principal_check(h, all, n0, n1);
    for (const auto& [u, sc] : chk.states)
        if (!sc.pass)
            throw Error("trim_pp: state " + h.state_name(u) + " fails (C1)/(C2)");

    std::set<int> removed;
    std::map<std::string, TrimEntry> log;
    for (int u = 0; u < h.state_count(); ++u) {
        const PPStateCheck& sc = chk.states.at(u);
        Int k_plus = sc.report.k_plus.back();
        Int k_minus = sc.report.k_minus.back();
        if ((k_plus + k_minus) % 2 != 0)
            throw Error("trim_pp: K+ and K- parity mismatch (internal)");
        Int y_plus = -(k_plus + k_minus) / 2;
        Int y_minus = -(k_plus - k_minus) / 2;
        if (y_plus < 0 || y_minus < 0)
            throw Error("trim_pp: negative removal count (internal)");
        LengthDistribution d = out_length_distribution(h, u);
        int r = d.support();
        if (y_plus > d.eta[r - 1] || y_minus > d.omega[r - 1])
            throw Error("trim_pp: removal count exceeds available edges (internal)");
        TrimEntry entry{y_plus, y_minus};
        for (int ei : removal_order(h, u)) {
            const Edge& e = h.edges()[ei];
            if (static_cast<int>(e.label.size()) != r) break;  // only longest edges go
            bool even = parity_of_word(e.label, h.alphabet()) == 0;
            if (even && y_plus > 0) {
                removed.insert(ei);
                --y_plus;
            } else if (!even && y_minus > 0) {
                removed.insert(ei);
                --y_minus;
            }
            if (y_plus == 0 && y_minus == 0) break;
        }
        if (y_plus != 0 || y_minus != 0)
            throw Error("trim_pp: removal did not complete (internal)");
        log[h.state_name(u)] = entry;
    }
    EncoderCandidate cand;
    cand.graph = drop_edges(h, removed);
    cand.trim_log = std::move(log);
    cand.source.status = SearchStatus::found;
    for (int u = 0; u < h.state_count(); ++u) cand.source.principal_set.push_back(u);
    return cand;
}

namespace {

// Subset-simulation walk; e need not be deterministic here.
bool containment_walk(const LabeledGraph& e, const LabeledGraph& g) {
    if (!g.is_ordinary()) throw Error("language_containment: right graph must be ordinary");
    if (!is_deterministic(g)) throw Error("language_containment: right graph must be deterministic");
    if (g.state_count() > 64) throw Error("language_containment: right graph too large");

    ExpandedVlg ex = expand_vlg(e);
    const LabeledGraph& eg = ex.graph;

    std::vector<int> sym_map(eg.alphabet().size());
    for (int i = 0; i < eg.alphabet().size(); ++i)
        sym_map[i] = g.alphabet().index_of(eg.alphabet().symbol(i));

    // Deterministic transition table of g: state x symbol -> state or -1.
    std::vector<std::vector<int>> delta(g.state_count(),
                                        std::vector<int>(g.alphabet().size(), -1));
    for (const Edge& ge : g.edges()) delta[ge.from][ge.label[0]] = ge.to;

    uint64_t full = g.state_count() == 64 ? ~0ULL : ((1ULL << g.state_count()) - 1);
    std::set<std::pair<int, uint64_t>> seen;
    std::vector<std::pair<int, uint64_t>> stack;
    for (int x = 0; x < eg.state_count(); ++x) {
        if (eg.out_edges(x).empty()) continue;
        if (seen.insert({x, full}).second) stack.push_back({x, full});
    }
    while (!stack.empty()) {
        auto [x, mask] = stack.back();
        stack.pop_back();
        for (int ei : eg.out_edges(x)) {
            const Edge& ee = eg.edges()[ei];
            int s = sym_map[ee.label[0]];
            if (s < 0) return false;  // symbol absent from g's alphabet
            uint64_t next = 0;
            for (int v = 0; v < g.state_count(); ++v)
                if ((mask >> v) & 1) {
                    int w = delta[v][s];
                    if (w >= 0) next |= 1ULL << w;
                }
            if (next == 0) return false;
            if (seen.insert({ee.to, next}).second) stack.push_back({ee.to, next});
        }
    }
    return true;
}

}  // namespace

bool language_containment(const LabeledGraph& e, const LabeledGraph& g) {
    if (!is_deterministic(e)) throw Error("language_containment: left graph must be deterministic");
    return containment_walk(e, g);
}

VerifyReport verify_vle(const LabeledGraph& e, const LabeledGraph& g, int n0, int n1,
                        bool parity) {
    if (n0 + n1 < 1) throw Error("verify_vle: n0 + n1 must be positive");
    VerifyReport rep;
    rep.parity_mode = parity;
    rep.deterministic = is_deterministic(e);
    rep.containment = containment_walk(e, g);
    rep.e3 = true;
    Int n = n0 + n1;
    for (int u = 0; u < e.state_count(); ++u) {
        VerifyStateItem item;
        item.state = u;
        if (e.out_edges(u).empty()) {
            item.kraft_equality = false;
            rep.e3 = false;
            rep.states.push_back(std::move(item));
            continue;
        }
        LengthDistribution d = out_length_distribution(e, u);
        int r = d.support();
        std::vector<Int> plus(r), minus(r);
        for (int ell = 1; ell <= r; ++ell) {
            plus[ell - 1] = d.eta[ell - 1] + d.omega[ell - 1];
            minus[ell - 1] = d.eta[ell - 1] - d.omega[ell - 1];
        }
        item.k_plus_r = kraft_functional(plus, n, r);
        item.kraft_equality = item.k_plus_r == 0;
        rep.e3 = rep.e3 && item.kraft_equality;
        if (parity) {
            item.k_minus_r = kraft_functional(minus, Int(n0) - Int(n1), r);
            if (item.k_minus_r != 0) rep.kminus_zero = false;
            for (int ell = 1; ell <= r; ++ell) {
                Int kp = kraft_functional(plus, n, ell);
                Int km = kraft_functional(minus, Int(n0) - Int(n1), ell);
                if (kp < abs(km)) item.e4_failures.push_back(ell);
            }
            if (!item.e4_failures.empty()) rep.e4 = false;
        }
        rep.states.push_back(std::move(item));
    }
    rep.pass = rep.deterministic && rep.containment && rep.e3 &&
               (!parity || (rep.e4 && rep.kminus_zero));
    return rep;
}

}  // namespace vle
