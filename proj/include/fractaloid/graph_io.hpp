#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fractaloid/graph.hpp"

namespace fractaloid {

using Json = nlohmann::ordered_json;

/// {"name": str, "vertices": [str...], "edges": [{"id","src","dst"}...]}
Json graph_to_json(const DirectedGraph& g);

/// Strict inverse of graph_to_json: unknown or missing keys and wrong types
/// raise StructuralError naming the offending key.
DirectedGraph graph_from_json(const Json& j);

DirectedGraph parse_graph(std::string_view text);
std::string dump_graph(const DirectedGraph& g);

DirectedGraph load_graph(const std::filesystem::path& path);
void save_graph(const DirectedGraph& g, const std::filesystem::path& path);

}  // namespace fractaloid
