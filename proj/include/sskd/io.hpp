#pragma once

#include <string>

#include <json.hpp>

#include "sskd/crystal_graph.hpp"
#include "sskd/embedding.hpp"
#include "sskd/tabloid.hpp"

namespace sskd {

// Tabloid wire format, rows listed from the bottom row up, empty rows as
// empty arrays: {"shape":[...],"alphabet":N,"rows":[[...],...]}.
nlohmann::ordered_json tabloid_to_json(const Tabloid& t);
Tabloid tabloid_from_json(const nlohmann::json& j);

// {"shape":[...],"root":0,"nodes":[{"id","reading_word","weight","maj"}],
//  "edges":[{"from","to","label"}]} with ids in BFS order.
nlohmann::ordered_json crystal_to_json(const CrystalGraph& g);

// DOT export; edges are colored by label index.
std::string crystal_to_dot(const CrystalGraph& g);

nlohmann::ordered_json filtration_report_to_json(const FiltrationReport& r);

}  // namespace sskd
