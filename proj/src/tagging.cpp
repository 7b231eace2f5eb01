#include "vle/tagging.hpp"

#include <algorithm>
#include <map>

#include "vle/kraft.hpp"

namespace vle {

TaggedEncoder make_tagged_encoder(LabeledGraph graph, ParityAlphabet tag_alphabet,
                                  std::vector<Word> tags, int start_state) {
    if (tags.size() != graph.edges().size())
        throw Error("tagged encoder: tag count differs from edge count");
    if (start_state < 0 || start_state >= graph.state_count())
        throw Error("tagged encoder: start state out of range");
    for (size_t i = 0; i < tags.size(); ++i) {
        if (tags[i].size() != graph.edges()[i].label.size())
            throw Error("tagged encoder: tag length differs from label length (T1)");
        for (int32_t s : tags[i])
            if (s < 0 || s >= tag_alphabet.size())
                throw Error("tagged encoder: tag symbol out of range");
    }
    for (int u = 0; u < graph.state_count(); ++u) {
        std::vector<Word> list;
        for (int ei : graph.out_edges(u)) list.push_back(tags[ei]);
        if (list.empty())
            throw Error("tagged encoder: state " + graph.state_name(u) + " has no edges (T2)");
        ListValidation v = validate_list(list, tag_alphabet);
        if (!v.prefix_free || !v.exhaustive)
            throw Error("tagged encoder: tag list at state " + graph.state_name(u) +
                        " is not exhaustive prefix-free (T2)");
    }
    TaggedEncoder t;
    t.parity_preserving = true;
    for (size_t i = 0; i < tags.size(); ++i) {
        int tp = parity_of_word(tags[i], tag_alphabet);
        int lp = parity_of_word(graph.edges()[i].label, graph.alphabet());
        if (tp != lp) t.parity_preserving = false;
    }
    t.graph = std::move(graph);
    t.tag_alphabet = std::move(tag_alphabet);
    t.tags = std::move(tags);
    t.start_state = start_state;
    return t;
}

TaggedEncoder assign_tags(const LabeledGraph& e, const ParityAlphabet& tag_alphabet,
                          bool parity, int start_state) {
    if (!is_deterministic(e)) throw Error("assign_tags: encoder must be deterministic");
    std::vector<Word> tags(e.edges().size());
    for (int u = 0; u < e.state_count(); ++u) {
        if (e.out_edges(u).empty())
            throw Error("assign_tags: state " + e.state_name(u) + " has no outgoing edges");
        LengthDistribution d = out_length_distribution(e, u);
        std::vector<Word> list;
        try {
            if (parity) {
                list = build_parity_prefix_free(d, tag_alphabet);
            } else {
                int r = d.support();
                std::vector<Int> mu(r);
                for (int ell = 1; ell <= r; ++ell) mu[ell - 1] = d.mu(ell);
                list = build_exhaustive_prefix_free(mu, tag_alphabet);
            }
        } catch (const Error& err) {
            throw Error("assign_tags: state " + e.state_name(u) + ": " + err.what());
        }
        // Bucket by (length, parity) -- by length alone without T3 -- and
        // pair tags with edges lexicographically inside each bucket.
        std::map<std::pair<int, int>, std::vector<Word>> tag_buckets;
        for (Word& w : list) {
            int p = parity ? parity_of_word(w, tag_alphabet) : 0;
            tag_buckets[{static_cast<int>(w.size()), p}].push_back(std::move(w));
        }
        std::map<std::pair<int, int>, std::vector<int>> edge_buckets;
        for (int ei : e.out_edges(u)) {
            const Edge& ed = e.edges()[ei];
            int p = parity ? parity_of_word(ed.label, e.alphabet()) : 0;
            edge_buckets[{static_cast<int>(ed.label.size()), p}].push_back(ei);
        }
        for (auto& [key, bucket] : edge_buckets) {
            auto it = tag_buckets.find(key);
            if (it == tag_buckets.end() || it->second.size() != bucket.size())
                throw Error("assign_tags: bucket mismatch at state " + e.state_name(u) +
                            " (internal)");
            std::sort(it->second.begin(), it->second.end());
            std::sort(bucket.begin(), bucket.end(), [&](int a, int b) {
                return e.edges()[a].label < e.edges()[b].label;
            });
            for (size_t i = 0; i < bucket.size(); ++i) tags[bucket[i]] = it->second[i];
        }
    }
    return make_tagged_encoder(e, tag_alphabet, std::move(tags), start_state);
}

namespace {

// Greedy prefix parse of `stream` from `pos` against the words attached to
// state u's out-edges; returns the matched edge or -1, with `partial` set
// when the remaining stream is a proper prefix of some word.
int match_at(const std::vector<int>& out_edges, const std::vector<Word>& words,
             const Word& stream, size_t pos, bool& partial) {
    partial = false;
    for (size_t i = 0; i < out_edges.size(); ++i) {
        const Word& w = words[out_edges[i]];
        size_t avail = stream.size() - pos;
        size_t k = 0;
        while (k < w.size() && k < avail && w[k] == stream[pos + k]) ++k;
        if (k == w.size()) return static_cast<int>(i);
        if (k == avail) partial = true;  // stream exhausted inside w
    }
    return -1;
}

}  // namespace

StreamResult encode(const TaggedEncoder& t, const Word& tags) {
    for (int32_t s : tags)
        if (s < 0 || s >= t.tag_alphabet.size()) throw Error("encode: tag symbol out of range");
    StreamResult res;
    res.end_state = t.start_state;
    size_t pos = 0;
    while (pos < tags.size()) {
        bool partial = false;
        int idx = match_at(t.graph.out_edges(res.end_state), t.tags, tags, pos, partial);
        if (idx < 0) {
            // Exhaustive tag lists always extend: the stream ended mid-tag.
            res.status = StreamStatus::mid_edge;
            res.message = "stream ended inside a tag after " + std::to_string(pos) +
                          " consumed symbols";
            res.consumed = pos;
            return res;
        }
        int ei = t.graph.out_edges(res.end_state)[idx];
        const Edge& e = t.graph.edges()[ei];
        pos += t.tags[ei].size();
        res.output.insert(res.output.end(), e.label.begin(), e.label.end());
        res.end_state = e.to;
    }
    res.consumed = pos;
    return res;
}

StreamResult decode(const TaggedEncoder& t, const Word& labels) {
    for (int32_t s : labels)
        if (s < 0 || s >= t.graph.alphabet().size())
            throw Error("decode: label symbol out of range");
    std::vector<Word> edge_labels;
    for (const Edge& e : t.graph.edges()) edge_labels.push_back(e.label);
    StreamResult res;
    res.end_state = t.start_state;
    size_t pos = 0;
    while (pos < labels.size()) {
        bool partial = false;
        int idx = match_at(t.graph.out_edges(res.end_state), edge_labels, labels, pos, partial);
        if (idx < 0) {
            res.status = partial ? StreamStatus::mid_edge : StreamStatus::no_match;
            res.message = (partial ? "stream ended inside a label at position "
                                   : "no edge label matches at position ") +
                          std::to_string(pos);
            res.consumed = pos;
            return res;
        }
        int ei = t.graph.out_edges(res.end_state)[idx];
        pos += t.graph.edges()[ei].label.size();
        res.output.insert(res.output.end(), t.tags[ei].begin(), t.tags[ei].end());
        res.end_state = t.graph.edges()[ei].to;
    }
    res.consumed = pos;
    return res;
}

ParityAudit parity_audit(const TaggedEncoder& t, const Word& tags) {
    ParityAudit audit;
    audit.result = encode(t, tags);
    Word consumed(tags.begin(), tags.begin() + audit.result.consumed);
    audit.tag_parity = parity_of_word(consumed, t.tag_alphabet);
    audit.label_parity = parity_of_word(audit.result.output, t.graph.alphabet());
    return audit;
}

}  // namespace vle
