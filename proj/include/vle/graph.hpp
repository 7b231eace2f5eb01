#ifndef VLE_GRAPH_HPP_
#define VLE_GRAPH_HPP_

#include <optional>
#include <string>
#include <vector>

#include "vle/alphabet.hpp"
#include "vle/numeric.hpp"

namespace vle {

struct Edge {
    int from = 0;
    int to = 0;
    Word label;  // nonempty
};

// A labeled directed graph.  Edges carry nonempty symbol-sequence labels; the
// graph is "ordinary" when every label has length 1.  Values are immutable
// after construction and shared freely across threads.
class LabeledGraph {
public:
    LabeledGraph() = default;

    // Validates endpoints, label symbols, and nonemptiness of labels.
    // Zero-edge graphs are accepted here; path-based analyses reject them.
    LabeledGraph(std::vector<std::string> states, std::vector<Edge> edges,
                 ParityAlphabet alphabet);

    int state_count() const { return static_cast<int>(states_.size()); }
    const std::vector<std::string>& states() const { return states_; }
    const std::string& state_name(int i) const { return states_.at(i); }
    int state_index(const std::string& name) const;  // -1 when unknown

    const std::vector<Edge>& edges() const { return edges_; }
    const ParityAlphabet& alphabet() const { return alphabet_; }

    // Edge indices outgoing from u, in input order.
    const std::vector<int>& out_edges(int u) const { return out_.at(u); }

    bool is_ordinary() const;
    int max_edge_length() const;

    // Replaces the parity partition of the alphabet, keeping symbols intact.
    LabeledGraph with_partition(const std::vector<std::string>& odd_symbols) const;

private:
    std::vector<std::string> states_;
    std::vector<Edge> edges_;
    ParityAlphabet alphabet_;
    std::vector<std::vector<int>> out_;
};

// Per-length even/odd word counts (eta_l, omega_l), index 0 holding length 1.
// Signed entries only ever arise inside admissibility witness search.
struct LengthDistribution {
    std::vector<Int> eta;
    std::vector<Int> omega;

    // Largest length with eta+omega nonzero; rejects the all-zero pair.
    int support() const;
    bool all_zero() const;
    bool nonnegative() const;
    Int mu(int ell) const;  // eta[ell-1] + omega[ell-1], 0 beyond support

    bool operator==(const LengthDistribution& o) const;
};

// True iff no outgoing label of any state is a prefix of a sibling label.
bool is_deterministic(const LabeledGraph& g);

// True iff strongly connected; a single state qualifies only via an edge.
bool is_irreducible(const LabeledGraph& g);

// The graph of length-t paths: same states, one edge per path, labels
// re-encoded as single symbols over the product alphabet Sigma^t.
LabeledGraph graph_power(const LabeledGraph& g, int t);

struct ExpandedVlg {
    LabeledGraph graph;
    // Per state of `graph`: source state in the input for retained states
    // (-1 for dummies), and the input edge a dummy state subdivides.
    std::vector<int> origin_state;
    std::vector<int> origin_edge;
};

// Replaces each length-l edge by a path of l unit edges through fresh dummy
// states; ordinary inputs come back unchanged.
ExpandedVlg expand_vlg(const LabeledGraph& h);

// Merges states with identical follower sets by partition refinement.
// Requires ordinary + deterministic + irreducible input; idempotent.
LabeledGraph reduce_to_shannon_cover(const LabeledGraph& g);

// Same states, only the edges whose label parity equals b.
LabeledGraph parity_subgraph(const LabeledGraph& g, int b);

// Restriction to `keep` (state indices); both endpoints must survive.
LabeledGraph induced_subgraph(const LabeledGraph& g, const std::vector<int>& keep);

// Exact per-length even/odd counts of the labels leaving state u.
LengthDistribution out_length_distribution(const LabeledGraph& g, int u);

}  // namespace vle

#endif
