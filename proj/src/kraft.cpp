#include "vle/kraft.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace vle {

namespace {

Int seq_at(const std::vector<Int>& v, int ell) {
    return ell >= 1 && ell <= static_cast<int>(v.size()) ? v[ell - 1] : Int(0);
}

std::string describe(const KraftReport& rep) {
    std::ostringstream os;
    os << "K+=(";
    for (size_t i = 0; i < rep.k_plus.size(); ++i) os << (i ? "," : "") << rep.k_plus[i];
    os << ") K-=(";
    for (size_t i = 0; i < rep.k_minus.size(); ++i) os << (i ? "," : "") << rep.k_minus[i];
    os << ")";
    if (!rep.condition_a) os << "; condition (a) fails";
    for (int ell : rep.condition_b_failures) os << "; condition (b) fails at l=" << ell;
    return os.str();
}

}  // namespace

Int kraft_functional(const std::vector<Int>& mu, const Int& n, int ell) {
    if (ell < 1) throw Error("kraft_functional: l must be >= 1");
    Int k = ipow(n, ell);
    for (int i = 1; i <= ell; ++i) k -= seq_at(mu, i) * ipow(n, ell - i);
    return k;
}

bool check_ordinary_kraft(const std::vector<Int>& mu, const Int& n) {
    if (n <= 0) throw Error("check_ordinary_kraft: n must be positive");
    int r = 0;
    for (int i = static_cast<int>(mu.size()); i >= 1; --i)
        if (mu[i - 1] != 0) {
            r = i;
            break;
        }
    if (r == 0) throw Error("check_ordinary_kraft: all-zero distribution");
    return kraft_functional(mu, n, r) == 0;
}

KraftReport check_parity_kraft(const LengthDistribution& d, int n0, int n1) {
    if (n0 < 1 || n1 < 1) throw Error("check_parity_kraft: n0, n1 must be positive");
    if (d.all_zero()) throw Error("check_parity_kraft: all-zero distribution");
    int r = d.support();
    KraftReport rep;
    std::vector<Int> plus(r), minus(r);
    for (int ell = 1; ell <= r; ++ell) {
        plus[ell - 1] = seq_at(d.eta, ell) + seq_at(d.omega, ell);
        minus[ell - 1] = seq_at(d.eta, ell) - seq_at(d.omega, ell);
    }
    for (int ell = 1; ell <= r; ++ell) {
        rep.k_plus.push_back(kraft_functional(plus, n0 + n1, ell));
        rep.k_minus.push_back(kraft_functional(minus, n0 - n1, ell));
        if (rep.k_plus.back() < abs(rep.k_minus.back()))
            rep.condition_b_failures.push_back(ell);
    }
    rep.condition_a = rep.k_plus.back() == 0;
    rep.verdict = rep.condition_a && rep.condition_b_failures.empty();
    return rep;
}

PrefixCounts yz_forward(const LengthDistribution& d, int n0, int n1) {
    int r = d.all_zero() ? 0 : d.support();
    PrefixCounts pc;
    pc.y.assign(r + 1, 0);
    pc.z.assign(r + 1, 0);
    pc.y[0] = 1;
    for (int ell = 1; ell <= r; ++ell) {
        pc.y[ell] = n0 * pc.y[ell - 1] + n1 * pc.z[ell - 1] - Rat(seq_at(d.eta, ell));
        pc.z[ell] = n1 * pc.y[ell - 1] + n0 * pc.z[ell - 1] - Rat(seq_at(d.omega, ell));
    }
    return pc;
}

PrefixCounts yz_backward(const LengthDistribution& d, int n0, int n1) {
    int r = d.all_zero() ? 0 : d.support();
    PrefixCounts pc;
    pc.y.assign(r + 1, 0);
    pc.z.assign(r + 1, 0);
    for (int ell = 0; ell <= r; ++ell) {
        Rat sum = 0;
        for (int i = 1; ell + i <= r; ++i)
            sum += Rat(seq_at(d.eta, ell + i) + seq_at(d.omega, ell + i)) /
                   Rat(ipow(Int(n0 + n1), i));
        Rat diff;
        if (n0 == n1) {
            // The subtracted recurrence is local; l = 0 carries no equation
            // and keeps the definitional value y0 - z0 = 1.
            diff = ell == 0 ? Rat(1) : Rat(seq_at(d.omega, ell) - seq_at(d.eta, ell));
        } else {
            diff = 0;
            for (int i = 1; ell + i <= r; ++i)
                diff += Rat(seq_at(d.eta, ell + i) - seq_at(d.omega, ell + i)) /
                        Rat(ipow(Int(n0 - n1), i));
        }
        pc.y[ell] = (sum + diff) / 2;
        pc.z[ell] = (sum - diff) / 2;
    }
    return pc;
}

namespace {

// Lexicographic comparison under the alphabet's declared symbol order is the
// default vector<int32_t> order, since words are stored as index sequences.
std::vector<Word> children_of(const std::vector<Word>& parents, const ParityAlphabet& alphabet) {
    std::vector<Word> out;
    for (const Word& w : parents)
        for (int s = 0; s < alphabet.size(); ++s) {
            Word c = w;
            c.push_back(s);
            out.push_back(std::move(c));
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Word> build_exhaustive_prefix_free(const std::vector<Int>& mu,
                                               const ParityAlphabet& alphabet) {
    Int n = alphabet.size();
    int r = 0;
    for (int i = static_cast<int>(mu.size()); i >= 1; --i)
        if (mu[i - 1] != 0) {
            r = i;
            break;
        }
    if (r == 0) throw Error("build_exhaustive_prefix_free: all-zero distribution");
    for (const Int& m : mu)
        if (m < 0) throw Error("build_exhaustive_prefix_free: negative count");
    if (!check_ordinary_kraft(mu, n)) {
        std::ostringstream os;
        os << "build_exhaustive_prefix_free: infeasible distribution, K_r = "
           << kraft_functional(mu, n, r);
        throw Error(os.str());
    }
    std::vector<Word> list;
    std::vector<Word> frontier{Word{}};
    for (int ell = 1; ell <= r; ++ell) {
        std::vector<Word> nodes = children_of(frontier, alphabet);
        Int take = seq_at(mu, ell);
        // Leftmost nodes become codewords, the rest stay internal.
        if (take > Int(nodes.size()))
            throw Error("build_exhaustive_prefix_free: level overflow");
        size_t t = static_cast<size_t>(take);
        list.insert(list.end(), nodes.begin(), nodes.begin() + t);
        frontier.assign(nodes.begin() + t, nodes.end());
    }
    if (!frontier.empty()) throw Error("build_exhaustive_prefix_free: leftover leaves");
    return list;
}

std::vector<Word> build_parity_prefix_free(const LengthDistribution& d,
                                           const ParityAlphabet& alphabet) {
    int n0 = alphabet.even_count();
    int n1 = alphabet.odd_count();
    if (!d.nonnegative()) throw Error("build_parity_prefix_free: negative count");
    KraftReport rep = check_parity_kraft(d, n0, n1);
    if (!rep.verdict)
        throw Error("build_parity_prefix_free: infeasible distribution: " + describe(rep));
    PrefixCounts pc = yz_forward(d, n0, n1);
    int r = d.support();

    std::vector<Word> list;
    std::vector<Word> internal{Word{}};
    for (int ell = 1; ell <= r; ++ell) {
        std::vector<Word> nodes = children_of(internal, alphabet);
        std::vector<Word> evens, odds;
        for (Word& w : nodes)
            (parity_of_word(w, alphabet) == 0 ? evens : odds).push_back(std::move(w));
        internal.clear();
        // Retain the lexicographically first y_l evens and z_l odds as
        // internal; the remainder are the level-l codewords.
        auto split = [&](std::vector<Word>& bucket, const Rat& keep) {
            size_t k = static_cast<size_t>(static_cast<Int>(numerator(keep)));
            if (k > bucket.size()) throw Error("build_parity_prefix_free: level overflow");
            internal.insert(internal.end(), bucket.begin(), bucket.begin() + k);
            list.insert(list.end(), bucket.begin() + k, bucket.end());
        };
        split(evens, pc.y[ell]);
        split(odds, pc.z[ell]);
    }
    std::sort(list.begin(), list.end(), [](const Word& a, const Word& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return list;
}

ListValidation validate_list(const std::vector<Word>& words, const ParityAlphabet& alphabet) {
    if (words.empty()) throw Error("validate_list: empty list");
    ListValidation v;
    for (const Word& w : words) {
        if (w.empty()) throw Error("validate_list: empty word");
        for (int32_t s : w)
            if (s < 0 || s >= alphabet.size()) throw Error("validate_list: symbol out of range");
    }
    std::vector<Word> sorted = words;
    std::sort(sorted.begin(), sorted.end());
    v.prefix_free = true;
    for (size_t i = 0; i + 1 < sorted.size(); ++i) {
        const Word& a = sorted[i];
        const Word& b = sorted[i + 1];
        if (a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin())) {
            v.prefix_free = false;
            break;
        }
    }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) v.prefix_free = false;

    // Trie walk: every node is either a codeword, or a proper prefix of one
    // whose children must all stay covered.
    std::set<Word> in_list(words.begin(), words.end());
    std::set<Word> proper_prefixes;
    for (const Word& w : words)
        for (size_t len = 0; len < w.size(); ++len)
            proper_prefixes.insert(Word(w.begin(), w.begin() + len));
    v.exhaustive = true;
    std::vector<Word> queue{Word{}};
    while (!queue.empty() && v.exhaustive) {
        Word w = std::move(queue.back());
        queue.pop_back();
        if (in_list.count(w)) continue;
        if (!proper_prefixes.count(w)) {
            v.exhaustive = false;
            break;
        }
        for (int s = 0; s < alphabet.size(); ++s) {
            Word c = w;
            c.push_back(s);
            queue.push_back(std::move(c));
        }
    }

    int r = 0;
    for (const Word& w : words) r = std::max(r, static_cast<int>(w.size()));
    v.distribution.eta.assign(r, 0);
    v.distribution.omega.assign(r, 0);
    for (const Word& w : words) {
        int ell = static_cast<int>(w.size());
        if (parity_of_word(w, alphabet) == 0)
            v.distribution.eta[ell - 1] += 1;
        else
            v.distribution.omega[ell - 1] += 1;
    }
    return v;
}

std::vector<Int> xi_sequence(const std::vector<int>& zset, int r) {
    if (r < 2) throw Error("xi_sequence: r must be >= 2");
    std::set<int> z(zset.begin(), zset.end());
    for (int i : z)
        if (i < 1 || i > r - 1) throw Error("xi_sequence: index outside 1..r-1");
    std::vector<Int> xi(r);
    xi[0] = 1;
    for (int ell = 2; ell <= r; ++ell)
        xi[ell - 1] = z.count(ell - 1) ? Int(xi[ell - 2] - 1) : Int(2 * xi[ell - 2]);
    return xi;
}

namespace {

// (eta_l, omega_l) = (n0 y_(l-1) + n1 z_(l-1) - y_l, n1 y_(l-1) + n0 z_(l-1) - z_l).
LengthDistribution dist_from_yz(const std::vector<Int>& y, const std::vector<Int>& z,
                                int n0, int n1, int r) {
    LengthDistribution d;
    d.eta.assign(r, 0);
    d.omega.assign(r, 0);
    auto at = [](const std::vector<Int>& v, int i) {
        return i >= 0 && i < static_cast<int>(v.size()) ? v[i] : Int(0);
    };
    for (int ell = 1; ell <= r; ++ell) {
        d.eta[ell - 1] = n0 * at(y, ell - 1) + n1 * at(z, ell - 1) - at(y, ell);
        d.omega[ell - 1] = n1 * at(y, ell - 1) + n0 * at(z, ell - 1) - at(z, ell);
    }
    return d;
}

void self_check_witness(const LengthDistribution& d, const std::vector<int>& zset,
                        int n0, int n1, int r) {
    if (!d.nonnegative()) throw Error("is_admissible: witness has negative entries");
    if (d.all_zero() || d.support() != r) throw Error("is_admissible: witness support mismatch");
    KraftReport rep = check_parity_kraft(d, n0, n1);
    Int k_minus_r = rep.k_minus.back();
    if (!rep.condition_a || k_minus_r != 0)
        throw Error("is_admissible: witness violates K+ = K- = 0");
    std::vector<int> z = zset;
    std::sort(z.begin(), z.end());
    if (rep.condition_b_failures != z)
        throw Error("is_admissible: witness failure set differs from Z");
}

}  // namespace

AdmissibilityWitness is_admissible(const std::vector<int>& zset, int n0, int n1, int r) {
    if (n0 < 1 || n1 < 1) throw Error("is_admissible: n0, n1 must be positive");
    if (r < 2) throw Error("is_admissible: r must be >= 2");
    std::set<int> z(zset.begin(), zset.end());
    for (int i : z)
        if (i < 1 || i > r - 1) throw Error("is_admissible: index outside 1..r-1");

    AdmissibilityWitness w;
    w.zset.assign(z.begin(), z.end());

    std::vector<Int> y(r, 0), zz(r, 0);
    if (n0 == 1 && n1 == 1) {
        w.xi = xi_sequence(w.zset, r);
        w.admissible =
            std::all_of(w.xi.begin(), w.xi.end(), [](const Int& x) { return x > 0; });
        if (!w.admissible) return w;
        y[0] = 1;
        for (int ell = 1; ell < r; ++ell) {
            y[ell] = w.xi[ell - 1];
            zz[ell] = z.count(ell) ? Int(-1) : w.xi[ell - 1];
        }
    } else if (n0 >= n1) {  // some alphabet side larger than 1: always admissible
        w.admissible = true;
        y[0] = 1;
        for (int ell = 1; ell < r; ++ell) y[ell] = n0;
        for (int ell : z) zz[ell] = -1;
    } else {
        // Parity-alternating pattern for the odd-heavy side.
        w.admissible = true;
        y[0] = 1;
        for (int ell = 1; ell < r; ++ell) {
            if (ell % 2 == 0)
                y[ell] = n1;
            else if (z.count(ell))
                y[ell] = -1;
            if (ell % 2 == 1)
                zz[ell] = n1;
            else if (z.count(ell))
                zz[ell] = -1;
        }
    }
    LengthDistribution d = dist_from_yz(y, zz, n0, n1, r);
    self_check_witness(d, w.zset, n0, n1, r);
    w.witness = std::move(d);
    return w;
}

}  // namespace vle
