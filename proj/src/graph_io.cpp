#include "vle/graph_io.hpp"

#include <fstream>
#include <set>

namespace vle {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw Error(where + ": expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) throw Error(where + ": unknown key \"" + it.key() + "\"");
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
    if (!j.is_array()) throw Error(where + ": expected an array of strings");
    std::vector<std::string> out;
    for (const auto& v : j) {
        if (!v.is_string()) throw Error(where + ": expected an array of strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

const std::set<std::string> kGraphKeys = {"alphabet", "odd",     "states",
                                          "edges",    "comment", "tag_alphabet",
                                          "tag_odd",  "start",   "principal_states",
                                          "trim_log"};
const std::set<std::string> kEdgeKeys = {"from", "to", "label", "tag"};

}  // namespace

LabeledGraph graph_from_json(const json& j) {
    check_keys(j, kGraphKeys, "graph");
    for (const char* key : {"alphabet", "odd", "states", "edges"})
        if (!j.contains(key)) throw Error(std::string("graph: missing key \"") + key + "\"");

    ParityAlphabet alphabet(string_list(j["alphabet"], "alphabet"),
                            string_list(j["odd"], "odd"));
    std::vector<std::string> states = string_list(j["states"], "states");

    std::vector<Edge> edges;
    if (!j["edges"].is_array()) throw Error("graph: \"edges\" must be an array");
    std::vector<std::string> state_names = states;
    auto state_index = [&](const std::string& name) {
        for (size_t i = 0; i < state_names.size(); ++i)
            if (state_names[i] == name) return static_cast<int>(i);
        throw Error("graph: edge endpoint \"" + name + "\" is not a declared state");
    };
    for (const auto& je : j["edges"]) {
        check_keys(je, kEdgeKeys, "edge");
        for (const char* key : {"from", "to", "label"})
            if (!je.contains(key)) throw Error(std::string("edge: missing key \"") + key + "\"");
        Edge e;
        e.from = state_index(je["from"].get<std::string>());
        e.to = state_index(je["to"].get<std::string>());
        e.label = alphabet.intern(string_list(je["label"], "label"));
        edges.push_back(std::move(e));
    }
    return LabeledGraph(std::move(states), std::move(edges), std::move(alphabet));
}

ordered_json graph_to_json(const LabeledGraph& g) {
    ordered_json j;
    j["alphabet"] = g.alphabet().symbols();
    j["odd"] = g.alphabet().odd_symbols();
    j["states"] = g.states();
    j["edges"] = ordered_json::array();
    for (const Edge& e : g.edges()) {
        ordered_json je;
        je["from"] = g.state_name(e.from);
        je["to"] = g.state_name(e.to);
        je["label"] = g.alphabet().externalize(e.label);
        j["edges"].push_back(std::move(je));
    }
    return j;
}

bool json_has_tags(const json& j) {
    return j.is_object() && j.contains("edges") && j["edges"].is_array() &&
           !j["edges"].empty() && j["edges"].front().contains("tag");
}

TaggedEncoder tagged_from_json(const json& j) {
    LabeledGraph g = graph_from_json(j);
    if (!j.contains("tag_alphabet"))
        throw Error("tagged encoder: missing key \"tag_alphabet\"");
    ParityAlphabet tag_alphabet(
        string_list(j["tag_alphabet"], "tag_alphabet"),
        j.contains("tag_odd") ? string_list(j["tag_odd"], "tag_odd")
                              : std::vector<std::string>{});
    std::vector<Word> tags;
    for (const auto& je : j["edges"]) {
        if (!je.contains("tag")) throw Error("tagged encoder: every edge needs a \"tag\"");
        tags.push_back(tag_alphabet.intern(string_list(je["tag"], "tag")));
    }
    int start = 0;
    if (j.contains("start")) {
        start = g.state_index(j["start"].get<std::string>());
        if (start < 0) throw Error("tagged encoder: unknown start state");
    }
    return make_tagged_encoder(std::move(g), std::move(tag_alphabet), std::move(tags), start);
}

ordered_json tagged_to_json(const TaggedEncoder& t) {
    ordered_json j = graph_to_json(t.graph);
    j["tag_alphabet"] = t.tag_alphabet.symbols();
    j["tag_odd"] = t.tag_alphabet.odd_symbols();
    j["start"] = t.graph.state_name(t.start_state);
    for (size_t i = 0; i < t.tags.size(); ++i)
        j["edges"][i]["tag"] = t.tag_alphabet.externalize(t.tags[i]);
    return j;
}

namespace {

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(path + ": " + e.what());
    }
    return j;
}

}  // namespace

LabeledGraph load_graph(const std::string& path) { return graph_from_json(parse_file(path)); }

TaggedEncoder load_tagged(const std::string& path) { return tagged_from_json(parse_file(path)); }

}  // namespace vle
