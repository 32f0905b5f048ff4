#include "fractaloid/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "fractaloid/error.hpp"

namespace fractaloid {

namespace {

void reject_unknown_keys(const Json& object, std::initializer_list<std::string_view> allowed,
                         std::string_view where) {
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw StructuralError("unknown key '" + key + "' in " + std::string(where));
  }
}

const std::string& require_string(const Json& object, const char* key, std::string_view where) {
  auto it = object.find(key);
  if (it == object.end())
    throw StructuralError("missing key '" + std::string(key) + "' in " + std::string(where));
  if (!it->is_string())
    throw StructuralError("key '" + std::string(key) + "' in " + std::string(where) +
                          " must be a string");
  return it->get_ref<const std::string&>();
}

const Json& require_array(const Json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) throw StructuralError("missing key '" + std::string(key) + "' in graph");
  if (!it->is_array())
    throw StructuralError("key '" + std::string(key) + "' in graph must be an array");
  return *it;
}

}  // namespace

Json graph_to_json(const DirectedGraph& g) {
  Json j;
  j["name"] = g.name();
  j["vertices"] = g.vertices();
  Json edges = Json::array();
  for (const auto& spec : g.edge_specs()) {
    Json e;
    e["id"] = spec.id;
    e["src"] = spec.src;
    e["dst"] = spec.dst;
    edges.push_back(std::move(e));
  }
  j["edges"] = std::move(edges);
  return j;
}

DirectedGraph graph_from_json(const Json& j) {
  if (!j.is_object()) throw StructuralError("graph JSON must be an object");
  reject_unknown_keys(j, {"name", "vertices", "edges"}, "graph");
  const std::string name = require_string(j, "name", "graph");

  std::vector<std::string> vertices;
  for (const auto& v : require_array(j, "vertices")) {
    if (!v.is_string()) throw StructuralError("key 'vertices' must hold strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<EdgeSpec> edges;
  for (const auto& e : require_array(j, "edges")) {
    const std::string where = "edge #" + std::to_string(edges.size());
    if (!e.is_object()) throw StructuralError(where + " must be an object");
    reject_unknown_keys(e, {"id", "src", "dst"}, where);
    edges.push_back({require_string(e, "id", where), require_string(e, "src", where),
                     require_string(e, "dst", where)});
  }
  return DirectedGraph(name, std::move(vertices), edges);
}

DirectedGraph parse_graph(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw StructuralError(std::string("malformed graph JSON: ") + e.what());
  }
  return graph_from_json(j);
}

std::string dump_graph(const DirectedGraph& g) { return graph_to_json(g).dump(2) + "\n"; }

DirectedGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot open graph file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

void save_graph(const DirectedGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw StructuralError("cannot write graph file '" + path.string() + "'");
  out << dump_graph(g);
}

}  // namespace fractaloid
