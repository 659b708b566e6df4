#include "sskd/io.hpp"

#include <sstream>

#include "sskd/errors.hpp"

namespace sskd {

nlohmann::ordered_json tabloid_to_json(const Tabloid& t) {
    nlohmann::ordered_json j;
    j["shape"] = t.shape();
    j["alphabet"] = t.alphabet();
    j["rows"] = t.rows();
    return j;
}

Tabloid tabloid_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("alphabet") || !j.contains("rows"))
        throw InvalidInputError("tabloid JSON needs shape, alphabet and rows");
    try {
        return Tabloid(j.at("shape").get<Composition>(),
                       j.at("rows").get<std::vector<std::vector<int>>>(), j.at("alphabet").get<int>());
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError(std::string("tabloid JSON: ") + e.what());
    }
}

nlohmann::ordered_json crystal_to_json(const CrystalGraph& g) {
    nlohmann::ordered_json j;
    j["shape"] = g.shape;
    j["root"] = g.root;
    auto nodes = nlohmann::ordered_json::array();
    for (std::size_t id = 0; id < g.nodes.size(); ++id) {
        nlohmann::ordered_json node;
        node["id"] = id;
        node["reading_word"] = g.nodes[id].word;
        node["weight"] = g.nodes[id].weight;
        node["maj"] = g.nodes[id].maj;
        nodes.push_back(std::move(node));
    }
    j["nodes"] = std::move(nodes);
    auto edges = nlohmann::ordered_json::array();
    for (const CrystalEdge& e : g.edges) {
        nlohmann::ordered_json edge;
        edge["from"] = e.from;
        edge["to"] = e.to;
        edge["label"] = e.label;
        edges.push_back(std::move(edge));
    }
    j["edges"] = std::move(edges);
    return j;
}

std::string crystal_to_dot(const CrystalGraph& g) {
    static const char* palette[] = {"violet", "blue", "purple", "red",
                                    "orange", "teal", "brown",  "magenta"};
    std::ostringstream os;
    os << "digraph crystal {\n";
    os << "  rankdir=TB;\n";
    os << "  node [shape=box];\n";
    for (std::size_t id = 0; id < g.nodes.size(); ++id) {
        const CrystalNode& node = g.nodes[id];
        os << "  n" << id << " [label=\"rw=" << node.word << "\\nwt=(";
        for (std::size_t i = 0; i < node.weight.size(); ++i) {
            if (i) os << ',';
            os << node.weight[i];
        }
        os << ")\\nmaj=" << node.maj << "\"];\n";
    }
    for (const CrystalEdge& e : g.edges) {
        os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.label << "\", color=\""
           << palette[static_cast<std::size_t>(e.label) % 8] << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

nlohmann::ordered_json filtration_report_to_json(const FiltrationReport& r) {
    nlohmann::ordered_json j;
    j["shape"] = r.shape;
    j["word"] = r.word;
    auto steps = nlohmann::ordered_json::array();
    for (const FiltrationStep& s : r.steps) {
        nlohmann::ordered_json step;
        step["i"] = s.letter;
        step["sizes"] = {s.from_size, s.to_size};
        step["violations"] = s.violations;
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    j["notes"] = r.notes;
    j["ok"] = r.ok();
    return j;
}

}  // namespace sskd
