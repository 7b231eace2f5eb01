#ifndef VLE_TAGGING_HPP_
#define VLE_TAGGING_HPP_

#include <string>
#include <vector>

#include "vle/graph.hpp"

namespace vle {

// A deterministic encoder whose edges additionally carry input tags:
// per edge |tag| = |label| (T1), per state the tag set is an exhaustive
// prefix-free list (T2), and parity_preserving records whether every edge
// has matching tag and label parity (T3).
struct TaggedEncoder {
    LabeledGraph graph;
    ParityAlphabet tag_alphabet;
    std::vector<Word> tags;  // parallel to graph.edges(), over tag_alphabet
    int start_state = 0;
    bool parity_preserving = false;
};

// Validates T1/T2 structurally and derives the T3 flag.
TaggedEncoder make_tagged_encoder(LabeledGraph graph, ParityAlphabet tag_alphabet,
                                  std::vector<Word> tags, int start_state);

// Builds per-state tag lists from the state's length distribution and matches
// tags to edges inside each (length, parity) bucket, lexicographically on
// both sides.  `parity` selects the parity-preserving construction (T3).
TaggedEncoder assign_tags(const LabeledGraph& e, const ParityAlphabet& tag_alphabet,
                          bool parity, int start_state = 0);

enum class StreamStatus {
    clean,     // stream ended on an edge boundary
    mid_edge,  // stream ended inside a tag/label
    no_match,  // no edge matches the stream prefix (decode only)
};

struct StreamResult {
    Word output;
    size_t consumed = 0;  // input symbols consumed into complete edges
    StreamStatus status = StreamStatus::clean;
    int end_state = 0;
    std::string message;
};

// Greedy parse of the tag stream by per-state exhaustive prefix-free tag
// lists; emits the matched edges' labels.  Partial output is retained when
// the stream ends mid-tag.
StreamResult encode(const TaggedEncoder& t, const Word& tags);

// Inverse parse by per-state prefix-free label lists; emits tags.
StreamResult decode(const TaggedEncoder& t, const Word& labels);

struct ParityAudit {
    int tag_parity = 0;    // cumulative, over consumed input
    int label_parity = 0;  // cumulative, over emitted output
    StreamResult result;
};

// Cumulative parities of the consumed tag stream and emitted label stream;
// equal on parity-preserving encoders whenever the stream ends cleanly.
ParityAudit parity_audit(const TaggedEncoder& t, const Word& tags);

}  // namespace vle

#endif
