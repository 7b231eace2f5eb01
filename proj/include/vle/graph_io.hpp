#ifndef VLE_GRAPH_IO_HPP_
#define VLE_GRAPH_IO_HPP_

#include <string>

#include <json.hpp>

#include "vle/graph.hpp"
#include "vle/tagging.hpp"

namespace vle {

// Graph files are UTF-8 JSON with keys "alphabet", "odd", "states", "edges"
// (objects {"from","to","label"[,"tag"]}).  Tagged encoders additionally
// carry "tag_alphabet", "tag_odd" and "start".  A "comment" key is ignored,
// and synthesized encoders may carry "principal_states"/"trim_log" annexes.
// Anything else is rejected.
LabeledGraph graph_from_json(const nlohmann::json& j);
nlohmann::ordered_json graph_to_json(const LabeledGraph& g);

bool json_has_tags(const nlohmann::json& j);

TaggedEncoder tagged_from_json(const nlohmann::json& j);
nlohmann::ordered_json tagged_to_json(const TaggedEncoder& t);

LabeledGraph load_graph(const std::string& path);
TaggedEncoder load_tagged(const std::string& path);

}  // namespace vle

#endif
