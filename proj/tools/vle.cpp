// Command-line surface for the constrained-encoder toolkit: capacity and
// spectral queries, Kraft feasibility, approximate-eigenvector existence
// tests, principal-state search, encoder synthesis, tagging, and streaming
// encode/decode.  Exit codes: 0 success, 1 analysis negative, 2 usage or
// input errors; encode/decode additionally use 3 (stream ended mid-edge)
// and 4 (unparseable stream).
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vle/aev.hpp"
#include "vle/graph_io.hpp"
#include "vle/kraft.hpp"
#include "vle/spectral.hpp"
#include "vle/synth.hpp"
#include "vle/tagging.hpp"

using namespace vle;
using nlohmann::ordered_json;

namespace {

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<Int> int_list(const std::string& csv) {
    std::vector<Int> out;
    for (const std::string& s : split_list(csv)) out.push_back(Int(s));
    return out;
}

std::vector<int> index_list(const std::string& csv) {
    std::vector<int> out;
    for (const std::string& s : split_list(csv)) out.push_back(std::stoi(s));
    return out;
}

// "none" clears the odd set; otherwise a comma-separated odd-symbol list.
LabeledGraph load_with_partition(const std::string& path, const std::string& partition) {
    LabeledGraph g = load_graph(path);
    if (partition.empty()) return g;
    if (partition == "none") return g.with_partition({});
    return g.with_partition(split_list(partition));
}

std::string seq_str(const std::vector<Int>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string vec_str(const AEVector& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ")";
    return os.str();
}

std::string set_str(const LabeledGraph& g, const std::vector<int>& states) {
    std::string out = "{";
    for (size_t i = 0; i < states.size(); ++i) {
        if (i) out += ",";
        out += g.state_name(states[i]);
    }
    return out + "}";
}

ordered_json json_seq(const std::vector<Int>& v) {
    ordered_json a = ordered_json::array();
    for (const Int& x : v) a.push_back(x.convert_to<long long>());
    return a;
}

// Default tag alphabet for (n0, n1): even symbols 0..n0-1, odd n0..n0+n1-1.
ParityAlphabet default_tag_alphabet(int n0, int n1) {
    std::vector<std::string> syms, odd;
    for (int i = 0; i < n0 + n1; ++i) syms.push_back(std::to_string(i));
    for (int i = n0; i < n0 + n1; ++i) odd.push_back(syms[i]);
    return ParityAlphabet(syms, odd);
}

Word parse_word(const std::string& text, const ParityAlphabet& alphabet) {
    bool single_char = true;
    for (const std::string& s : alphabet.symbols()) single_char &= s.size() == 1;
    std::vector<std::string> names;
    if (text.find('.') != std::string::npos) {
        std::string cur;
        for (char c : text) {
            if (c == '.') {
                names.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        names.push_back(cur);
    } else if (single_char) {
        for (char c : text) names.emplace_back(1, c);
    } else {
        names.push_back(text);
    }
    return alphabet.intern(names);
}

void print_graph(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

LengthDistribution dist_from_flags(const std::string& eta, const std::string& omega) {
    LengthDistribution d;
    d.eta = int_list(eta);
    d.omega = int_list(omega);
    size_t n = std::max(d.eta.size(), d.omega.size());
    d.eta.resize(n, 0);
    d.omega.resize(n, 0);
    return d;
}

int cmd_capacity(const std::string& file, const std::string& partition, bool json) {
    LabeledGraph g = load_with_partition(file, partition);
    double cap = g.is_ordinary() ? capacity_ordinary(g) : std::log2(theta_max(g));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", cap);
    if (json) {
        ordered_json j;
        j["capacity"] = cap;
        j["display"] = buf;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << buf << "\n";
    }
    return 0;
}

int cmd_kraft_check(const std::string& mu, long long n, const std::string& eta,
                    const std::string& omega, int n0, int n1, bool json) {
    if (!mu.empty()) {
        std::vector<Int> m = int_list(mu);
        bool ok = check_ordinary_kraft(m, n);
        int r = 0;
        for (int i = static_cast<int>(m.size()); i >= 1; --i)
            if (m[i - 1] != 0) {
                r = i;
                break;
            }
        Int kr = kraft_functional(m, n, r);
        if (json) {
            ordered_json j;
            j["r"] = r;
            j["k_r"] = kr.convert_to<long long>();
            j["feasible"] = ok;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "K_" << r << " = " << kr << "\n";
            std::cout << "verdict: " << (ok ? "feasible" : "infeasible") << "\n";
        }
        return ok ? 0 : 1;
    }
    LengthDistribution d = dist_from_flags(eta, omega);
    KraftReport rep = check_parity_kraft(d, n0, n1);
    if (json) {
        ordered_json j;
        j["r"] = d.support();
        j["k_plus"] = json_seq(rep.k_plus);
        j["k_minus"] = json_seq(rep.k_minus);
        j["condition_a"] = rep.condition_a;
        j["condition_b_failures"] = rep.condition_b_failures;
        j["feasible"] = rep.verdict;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "r = " << d.support() << "\n";
        std::cout << "K+ = " << seq_str(rep.k_plus) << "\n";
        std::cout << "K- = " << seq_str(rep.k_minus) << "\n";
        std::cout << "condition (a): " << (rep.condition_a ? "pass" : "fail") << "\n";
        if (rep.condition_b_failures.empty()) {
            std::cout << "condition (b): pass\n";
        } else {
            std::cout << "condition (b): fail at l=";
            for (size_t i = 0; i < rep.condition_b_failures.size(); ++i)
                std::cout << (i ? "," : "") << rep.condition_b_failures[i];
            std::cout << "\n";
        }
        std::cout << "verdict: " << (rep.verdict ? "feasible" : "infeasible") << "\n";
    }
    return rep.verdict ? 0 : 1;
}

ParityAlphabet alphabet_from_flags(const std::string& alphabet, const std::string& odd,
                                   int n0, int n1) {
    if (!alphabet.empty())
        return ParityAlphabet(split_list(alphabet),
                              odd.empty() || odd == "none" ? std::vector<std::string>{}
                                                           : split_list(odd));
    return default_tag_alphabet(n0, n1);
}

int cmd_build_list(const std::string& mu, long long n, const std::string& eta,
                   const std::string& omega, int n0, int n1, const std::string& alphabet,
                   const std::string& odd) {
    if (!mu.empty()) {
        ParityAlphabet a = alphabet_from_flags(alphabet, odd, static_cast<int>(n), 0);
        for (const Word& w : build_exhaustive_prefix_free(int_list(mu), a))
            std::cout << a.render(w) << "\n";
        return 0;
    }
    ParityAlphabet a = alphabet_from_flags(alphabet, odd, n0, n1);
    for (const Word& w : build_parity_prefix_free(dist_from_flags(eta, omega), a))
        std::cout << a.render(w) << "\n";
    return 0;
}

int cmd_validate_list(const std::string& alphabet, const std::string& odd, int n0, int n1,
                      const std::string& file, bool json) {
    ParityAlphabet a = alphabet_from_flags(alphabet, odd, n0, n1);
    std::vector<Word> words;
    std::istream* in = &std::cin;
    std::ifstream f;
    if (!file.empty()) {
        f.open(file);
        if (!f) throw Error("cannot open " + file);
        in = &f;
    }
    std::string line;
    while (std::getline(*in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) words.push_back(parse_word(line, a));
    }
    ListValidation v = validate_list(words, a);
    if (json) {
        ordered_json j;
        j["prefix_free"] = v.prefix_free;
        j["exhaustive"] = v.exhaustive;
        j["eta"] = json_seq(v.distribution.eta);
        j["omega"] = json_seq(v.distribution.omega);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "prefix-free: " << (v.prefix_free ? "yes" : "no") << "\n";
        std::cout << "exhaustive: " << (v.exhaustive ? "yes" : "no") << "\n";
        std::cout << "eta = " << seq_str(v.distribution.eta) << "\n";
        std::cout << "omega = " << seq_str(v.distribution.omega) << "\n";
    }
    return v.prefix_free && v.exhaustive ? 0 : 1;
}

int cmd_aev(const std::string& file, const std::string& partition, long long n, int t,
            long long cap, bool json) {
    LabeledGraph g = load_with_partition(file, partition);
    CountMatrix a = adjacency(g).pow(t);
    AEVector x = franaszek_reduce(a, n, AEVector(g.state_count(), cap));
    bool empty = is_zero(x);
    if (json) {
        ordered_json j;
        j["empty"] = empty;
        j["cap"] = cap;
        j["x"] = json_seq(x);
        std::cout << j.dump() << "\n";
    } else if (empty) {
        std::cout << "empty under cap " << cap << "\n";
    } else {
        std::cout << "x = " << vec_str(x) << "\n";
    }
    return empty ? 1 : 0;
}

int cmd_fixed_existence(const std::string& file, const std::string& partition, int t,
                        long long n0, long long n1, bool deterministic, long long cap,
                        bool json) {
    LabeledGraph g = load_with_partition(file, partition);
    ExistenceResult res = fixed_length_existence(g, t, n0, n1, deterministic, cap);
    if (json) {
        ordered_json j;
        j["exists"] = res.exists;
        j["conclusive"] = res.conclusive;
        j["cap"] = res.cap_bound.convert_to<long long>();
        j["x"] = json_seq(res.vector_found);
        std::cout << j.dump() << "\n";
    } else if (res.exists) {
        std::cout << "exists: x = " << vec_str(res.vector_found) << "\n";
    } else if (deterministic) {
        std::cout << "none (conclusive for deterministic encoders)\n";
    } else {
        std::cout << "empty under cap " << res.cap_bound << "\n";
    }
    return res.exists ? 0 : 1;
}

void print_cut(const LabeledGraph& g, int u, const StateCut& cut, bool parities) {
    std::cout << "cut at " << g.state_name(u) << ":\n";
    for (size_t i = 0; i < cut.words.size(); ++i) {
        std::cout << "  " << g.alphabet().render(cut.words[i]) << " -> "
                  << g.state_name(cut.terminals[i]);
        if (parities)
            std::cout << "  ["
                      << (parity_of_word(cut.words[i], g.alphabet()) == 0 ? "even" : "odd")
                      << "]";
        std::cout << "\n";
    }
}

ordered_json principal_json(const LabeledGraph& g, const PrincipalResult& pr) {
    ordered_json j;
    j["status"] = pr.status == SearchStatus::found
                      ? "found"
                      : (pr.status == SearchStatus::none ? "none" : "inconclusive");
    ordered_json names = ordered_json::array();
    for (int u : pr.principal_set) names.push_back(g.state_name(u));
    j["principal_states"] = names;
    ordered_json cuts = ordered_json::object();
    for (const auto& [u, cut] : pr.cuts) {
        ordered_json rows = ordered_json::array();
        for (size_t i = 0; i < cut.words.size(); ++i) {
            ordered_json row;
            row["label"] = g.alphabet().externalize(cut.words[i]);
            row["to"] = g.state_name(cut.terminals[i]);
            rows.push_back(std::move(row));
        }
        cuts[g.state_name(u)] = std::move(rows);
    }
    j["cuts"] = std::move(cuts);
    if (!pr.note.empty()) j["note"] = pr.note;
    return j;
}

int cmd_principal(const std::string& file, const std::string& partition, long long n, int r,
                  bool json) {
    LabeledGraph g = load_with_partition(file, partition);
    PrincipalResult pr = ordinary_principal_states(g, n, r);
    if (json) {
        std::cout << principal_json(g, pr).dump() << "\n";
        return pr.status == SearchStatus::found ? 0 : 1;
    }
    if (pr.status != SearchStatus::found) {
        std::cout << "no principal set (r <= " << r << ")\n";
        return 1;
    }
    std::cout << "principal states: " << set_str(g, pr.principal_set) << "\n";
    for (int u : pr.principal_set) print_cut(g, u, pr.cuts.at(u), false);
    return 0;
}

int cmd_pp_principal(const std::string& file, const std::string& partition, int n0, int n1,
                     int r, long long budget, bool parallel, bool json) {
    LabeledGraph g = load_with_partition(file, partition);
    SearchOptions opts;
    if (budget > 0) opts.max_tree_nodes = budget;
    opts.max_r = std::max(opts.max_r, r);
    opts.parallel = parallel;
    PrincipalResult pr = pp_principal_search(g, n0, n1, r, &opts);
    if (json) {
        std::cout << principal_json(g, pr).dump() << "\n";
        return pr.status == SearchStatus::found ? 0 : 1;
    }
    if (pr.status == SearchStatus::inconclusive) {
        std::cout << pr.note << "\n";
        return 1;
    }
    if (pr.status == SearchStatus::none) {
        std::cout << "no parity-preserving principal set (r <= " << r << ")\n";
        return 1;
    }
    std::cout << "principal states: " << set_str(g, pr.principal_set) << "\n";
    for (int u : pr.principal_set) print_cut(g, u, pr.cuts.at(u), true);
    return 0;
}

ordered_json encoder_json(const EncoderCandidate& cand, const LabeledGraph& host,
                          const PrincipalResult& pr) {
    ordered_json j = graph_to_json(cand.graph);
    ordered_json names = ordered_json::array();
    for (int u : pr.principal_set) names.push_back(host.state_name(u));
    j["principal_states"] = names;
    ordered_json log = ordered_json::object();
    for (const auto& [name, entry] : cand.trim_log) {
        ordered_json e;
        e["even_removed"] = entry.even_removed.convert_to<long long>();
        e["odd_removed"] = entry.odd_removed.convert_to<long long>();
        log[name] = std::move(e);
    }
    j["trim_log"] = std::move(log);
    return j;
}

int cmd_synth(const std::string& file, const std::string& partition, long long n, int n0,
              int n1, int r, long long budget, bool parallel) {
    LabeledGraph g = load_with_partition(file, partition);
    if (n > 0) {
        PrincipalResult pr = ordinary_principal_states(g, n, r);
        if (pr.status != SearchStatus::found) {
            std::cout << "no principal set (r <= " << r << ")\n";
            return 1;
        }
        EncoderCandidate cand = trim_ordinary(cut_subgraph(g, pr), n);
        cand.source = pr;
        print_graph(encoder_json(cand, g, pr));
        return 0;
    }
    SearchOptions opts;
    if (budget > 0) opts.max_tree_nodes = budget;
    opts.max_r = std::max(opts.max_r, r);
    opts.parallel = parallel;
    PrincipalResult pr = pp_principal_search(g, n0, n1, r, &opts);
    if (pr.status != SearchStatus::found) {
        std::cout << (pr.status == SearchStatus::none
                          ? "no parity-preserving principal set (r <= " + std::to_string(r) + ")"
                          : pr.note)
                  << "\n";
        return 1;
    }
    EncoderCandidate cand = trim_pp(cut_subgraph(g, pr), n0, n1);
    cand.source = pr;
    print_graph(encoder_json(cand, g, pr));
    return 0;
}

int cmd_tag(const std::string& file, long long n, int n0, int n1, bool parity,
            const std::string& tag_alphabet, const std::string& tag_odd,
            const std::string& start) {
    LabeledGraph g = load_graph(file);
    ParityAlphabet tags = !tag_alphabet.empty()
                              ? ParityAlphabet(split_list(tag_alphabet),
                                               tag_odd.empty() || tag_odd == "none"
                                                   ? std::vector<std::string>{}
                                                   : split_list(tag_odd))
                              : (n > 0 ? default_tag_alphabet(static_cast<int>(n), 0)
                                       : default_tag_alphabet(n0, n1));
    int start_state = 0;
    if (!start.empty()) {
        start_state = g.state_index(start);
        if (start_state < 0) throw Error("unknown start state " + start);
    }
    TaggedEncoder t = assign_tags(g, tags, parity, start_state);
    print_graph(tagged_to_json(t));
    return 0;
}

int cmd_stream(const std::string& file, const std::string& start, bool encoding) {
    TaggedEncoder t = load_tagged(file);
    if (!start.empty()) {
        int s = t.graph.state_index(start);
        if (s < 0) throw Error("unknown start state " + start);
        t.start_state = s;
    }
    const ParityAlphabet& in_alpha = encoding ? t.tag_alphabet : t.graph.alphabet();
    const ParityAlphabet& out_alpha = encoding ? t.graph.alphabet() : t.tag_alphabet;
    Word stream;
    std::string token;
    while (std::cin >> token) {
        int idx = in_alpha.index_of(token);
        if (idx < 0) {
            std::cerr << "error: unknown symbol '" << token << "'\n";
            return 4;
        }
        stream.push_back(idx);
    }
    StreamResult res = encoding ? encode(t, stream) : decode(t, stream);
    for (size_t i = 0; i < res.output.size(); ++i)
        std::cout << (i ? " " : "") << out_alpha.symbol(res.output[i]);
    std::cout << "\n";
    if (res.status == StreamStatus::clean) return 0;
    std::cerr << "error: " << res.message << "\n";
    return res.status == StreamStatus::mid_edge ? 3 : 4;
}

int cmd_admissible(int n0, int n1, int r, const std::string& zset, bool json) {
    AdmissibilityWitness w = is_admissible(
        zset.empty() ? std::vector<int>{} : index_list(zset), n0, n1, r);
    if (json) {
        ordered_json j;
        j["admissible"] = w.admissible;
        j["zset"] = w.zset;
        if (!w.xi.empty()) j["xi"] = json_seq(w.xi);
        if (w.witness) {
            j["eta"] = json_seq(w.witness->eta);
            j["omega"] = json_seq(w.witness->omega);
        }
        std::cout << j.dump() << "\n";
        return w.admissible ? 0 : 1;
    }
    std::cout << (w.admissible ? "admissible" : "inadmissible");
    if (!w.xi.empty()) std::cout << "; xi=" << seq_str(w.xi);
    if (w.witness)
        std::cout << "; witness eta=" << seq_str(w.witness->eta)
                  << " omega=" << seq_str(w.witness->omega);
    std::cout << "\n";
    return w.admissible ? 0 : 1;
}

int cmd_search_none(const std::string& file, const std::string& partition, int n0, int n1,
                    int rmax, long long budget, bool parallel) {
    LabeledGraph g = load_with_partition(file, partition);
    if (parity_subgraph(g, 1).edges().empty() && n1 >= 1) {
        std::cout << "rejected up front: every label is even, but n1 = " << n1
                  << " requires odd tags in an exhaustive list\n";
        return 1;
    }
    SearchOptions opts;
    opts.collect_survey = true;
    if (budget > 0) opts.max_tree_nodes = budget;
    opts.max_r = std::max(opts.max_r, rmax);
    opts.parallel = parallel;
    PrincipalResult pr = pp_principal_search(g, n0, n1, rmax, &opts);
    for (const SubsetOutcome& out : opts.survey) {
        std::cout << "candidate V'=" << set_str(g, out.subset) << ": ";
        if (out.passed) {
            std::cout << "pass\n";
        } else if (out.inconclusive) {
            std::cout << "inconclusive (budget)\n";
        } else {
            std::cout << "fail: state " << g.state_name(out.failing_state)
                      << " has no cut satisfying (C1)/(C2) with length <= " << rmax << "\n";
        }
    }
    if (pr.status == SearchStatus::found) {
        EncoderCandidate cand = trim_pp(cut_subgraph(g, pr), n0, n1);
        std::cout << "found encoder at V'=" << set_str(g, pr.principal_set) << ":\n";
        for (const Edge& e : cand.graph.edges()) {
            std::cout << "  " << cand.graph.alphabet().render(e.label) << " -> "
                      << cand.graph.state_name(e.to) << "  ["
                      << (parity_of_word(e.label, cand.graph.alphabet()) == 0 ? "even" : "odd")
                      << "]\n";
        }
        return 0;
    }
    if (pr.status == SearchStatus::inconclusive) {
        std::cout << pr.note << "\n";
        return 1;
    }
    std::cout << "no deterministic parity-preserving VLE with edge length <= " << rmax
              << " (bounded search)\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constrained-code encoder toolkit"};
    app.require_subcommand(1);
    std::function<int()> run;

    // Shared option storage.
    std::string file, partition, mu, eta, omega, alphabet, odd, zset, start;
    std::string tag_alphabet_opt, tag_odd_opt, list_file;
    long long n = 0, cap = 64, budget = 0;
    int n0 = 0, n1 = 0, r = 1, t = 1;
    bool json = false, deterministic = false, parity = false, parallel = false;

    auto* c_cap = app.add_subcommand("capacity", "capacity of a presentation");
    c_cap->add_option("file", file)->required();
    c_cap->add_option("--partition", partition, "odd symbols, comma-separated (or 'none')");
    c_cap->add_flag("--json", json);
    c_cap->callback([&] { run = [&] { return cmd_capacity(file, partition, json); }; });

    auto* c_red = app.add_subcommand("reduce", "merge states with equal follower sets");
    c_red->add_option("file", file)->required();
    c_red->callback([&] {
        run = [&] {
            print_graph(graph_to_json(reduce_to_shannon_cover(load_graph(file))));
            return 0;
        };
    });

    auto* c_pow = app.add_subcommand("power", "t-th power of an ordinary graph");
    c_pow->add_option("file", file)->required();
    c_pow->add_option("-t", t)->required();
    c_pow->callback([&] {
        run = [&] {
            print_graph(graph_to_json(graph_power(load_graph(file), t)));
            return 0;
        };
    });

    auto* c_split = app.add_subcommand("parity-split", "edges of one parity");
    c_split->add_option("file", file)->required();
    c_split->add_option("-b", r, "parity bit (0 or 1)")->required();
    c_split->add_option("--partition", partition);
    c_split->callback([&] {
        run = [&] {
            print_graph(graph_to_json(parity_subgraph(load_with_partition(file, partition), r)));
            return 0;
        };
    });

    auto* c_kraft = app.add_subcommand("kraft-check", "Kraft feasibility of a distribution");
    c_kraft->add_option("--mu", mu, "ordinary distribution, comma-separated");
    c_kraft->add_option("-n", n, "alphabet size (ordinary mode)");
    c_kraft->add_option("--eta", eta, "even counts, comma-separated");
    c_kraft->add_option("--omega", omega, "odd counts, comma-separated");
    c_kraft->add_option("--n0", n0);
    c_kraft->add_option("--n1", n1);
    c_kraft->add_flag("--json", json);
    c_kraft->callback(
        [&] { run = [&] { return cmd_kraft_check(mu, n, eta, omega, n0, n1, json); }; });

    auto* c_build = app.add_subcommand("build-list", "construct an exhaustive prefix-free list");
    c_build->add_option("--mu", mu);
    c_build->add_option("-n", n);
    c_build->add_option("--eta", eta);
    c_build->add_option("--omega", omega);
    c_build->add_option("--n0", n0);
    c_build->add_option("--n1", n1);
    c_build->add_option("--alphabet", alphabet, "symbols, comma-separated");
    c_build->add_option("--odd", odd, "odd symbols, comma-separated");
    c_build->callback([&] {
        run = [&] { return cmd_build_list(mu, n, eta, omega, n0, n1, alphabet, odd); };
    });

    auto* c_val = app.add_subcommand("validate-list", "check a word list (one per line)");
    c_val->add_option("file", list_file, "word file (stdin when omitted)");
    c_val->add_option("--alphabet", alphabet);
    c_val->add_option("--odd", odd);
    c_val->add_option("--n0", n0);
    c_val->add_option("--n1", n1);
    c_val->add_flag("--json", json);
    c_val->callback([&] {
        run = [&] { return cmd_validate_list(alphabet, odd, n0, n1, list_file, json); };
    });

    auto* c_aev = app.add_subcommand("aev", "largest approximate eigenvector under a cap");
    c_aev->add_option("file", file)->required();
    c_aev->add_option("-n", n)->required();
    c_aev->add_option("-t", t, "graph power (default 1)");
    c_aev->add_option("--cap", cap);
    c_aev->add_option("--partition", partition);
    c_aev->add_flag("--json", json);
    c_aev->callback([&] { run = [&] { return cmd_aev(file, partition, n, t, cap, json); }; });

    auto* c_fix = app.add_subcommand("fixed-existence", "fixed-length encoder existence");
    c_fix->add_option("file", file)->required();
    c_fix->add_option("-t", t)->required();
    c_fix->add_option("--n0", n0)->required();
    c_fix->add_option("--n1", n1)->required();
    c_fix->add_option("--cap", cap);
    c_fix->add_option("--partition", partition);
    c_fix->add_flag("--deterministic", deterministic);
    c_fix->add_flag("--json", json);
    c_fix->callback([&] {
        run = [&] {
            return cmd_fixed_existence(file, partition, t, n0, n1, deterministic, cap, json);
        };
    });

    auto* c_pri = app.add_subcommand("principal", "ordinary principal states");
    c_pri->add_option("file", file)->required();
    c_pri->add_option("-n", n)->required();
    c_pri->add_option("-r,--rmax", r)->required();
    c_pri->add_option("--partition", partition);
    c_pri->add_flag("--json", json);
    c_pri->callback([&] { run = [&] { return cmd_principal(file, partition, n, r, json); }; });

    auto* c_ppp = app.add_subcommand("pp-principal", "parity-preserving principal states");
    c_ppp->add_option("file", file)->required();
    c_ppp->add_option("--n0", n0)->required();
    c_ppp->add_option("--n1", n1)->required();
    c_ppp->add_option("-r,--rmax", r)->required();
    c_ppp->add_option("--partition", partition);
    c_ppp->add_option("--budget", budget, "path-tree node budget");
    c_ppp->add_flag("--parallel", parallel);
    c_ppp->add_flag("--json", json);
    c_ppp->callback([&] {
        run = [&] { return cmd_pp_principal(file, partition, n0, n1, r, budget, parallel, json); };
    });

    auto* c_syn = app.add_subcommand("synth", "synthesize a deterministic (pp-)VLE");
    c_syn->add_option("file", file)->required();
    c_syn->add_option("-n", n, "ordinary mode: alphabet size");
    c_syn->add_option("--n0", n0);
    c_syn->add_option("--n1", n1);
    c_syn->add_option("-r,--rmax", r)->required();
    c_syn->add_option("--partition", partition);
    c_syn->add_option("--budget", budget);
    c_syn->add_flag("--parallel", parallel);
    c_syn->callback([&] {
        run = [&] { return cmd_synth(file, partition, n, n0, n1, r, budget, parallel); };
    });

    auto* c_tag = app.add_subcommand("tag", "assign input tags to an encoder");
    c_tag->add_option("file", file)->required();
    c_tag->add_option("-n", n, "ordinary mode: tag alphabet size");
    c_tag->add_option("--n0", n0);
    c_tag->add_option("--n1", n1);
    c_tag->add_flag("--parity", parity);
    c_tag->add_option("--tag-alphabet", tag_alphabet_opt);
    c_tag->add_option("--tag-odd", tag_odd_opt);
    c_tag->add_option("--start", start);
    c_tag->callback([&] {
        run = [&] {
            return cmd_tag(file, n, n0, n1, parity, tag_alphabet_opt, tag_odd_opt, start);
        };
    });

    auto* c_enc = app.add_subcommand("encode", "tags on stdin -> labels on stdout");
    c_enc->add_option("file", file)->required();
    c_enc->add_option("--start", start);
    c_enc->callback([&] { run = [&] { return cmd_stream(file, start, true); }; });

    auto* c_dec = app.add_subcommand("decode", "labels on stdin -> tags on stdout");
    c_dec->add_option("file", file)->required();
    c_dec->add_option("--start", start);
    c_dec->callback([&] { run = [&] { return cmd_stream(file, start, false); }; });

    auto* c_adm = app.add_subcommand("admissible", "admissibility of a failure set");
    c_adm->add_option("--n0", n0)->required();
    c_adm->add_option("--n1", n1)->required();
    c_adm->add_option("-r,--rmax", r)->required();
    c_adm->add_option("--zset", zset, "failure indices, comma-separated");
    c_adm->add_flag("--json", json);
    c_adm->callback([&] { run = [&] { return cmd_admissible(n0, n1, r, zset, json); }; });

    auto* c_sn = app.add_subcommand("search-none",
                                    "exhaustive bounded search for a pp-encoder");
    c_sn->add_option("file", file)->required();
    c_sn->add_option("--n0", n0)->required();
    c_sn->add_option("--n1", n1)->required();
    c_sn->add_option("-r,--rmax", r)->required();
    c_sn->add_option("--partition", partition);
    c_sn->add_option("--budget", budget);
    c_sn->add_flag("--parallel", parallel);
    c_sn->callback([&] {
        run = [&] { return cmd_search_none(file, partition, n0, n1, r, budget, parallel); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return run();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
