#include "fractaloid/fractality.hpp"

#include <algorithm>
#include <map>

#include "fractaloid/error.hpp"

namespace fractaloid {

std::size_t max_out_degree(const DirectedGraph& g) {
  if (g.empty()) throw ParameterError("max_out_degree of an empty graph");
  std::size_t n = 0;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) n = std::max(n, g.out_edges(v).size());
  return n;
}

std::optional<VertexIndex> first_irregular_vertex(const DirectedGraph& g) {
  const std::size_t n = max_out_degree(g);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const auto d = degrees(g, v);
    if (d.out != n || d.in != n) return v;
  }
  return std::nullopt;
}

std::optional<std::string> non_fractal_reason(const DirectedGraph& g) {
  if (g.empty()) return "graph has no vertices";
  if (!is_connected(g)) return "graph is disconnected";
  if (g.edge_count() == 0) return "graph has no edges";
  if (auto v = first_irregular_vertex(g)) {
    const auto d = degrees(g, *v);
    return "vertex '" + g.vertex_name(*v) + "' has out-degree " + std::to_string(d.out) +
           " and in-degree " + std::to_string(d.in) + ", expected " +
           std::to_string(max_out_degree(g));
  }
  return std::nullopt;
}

bool is_fractal(const DirectedGraph& g) {
  if (!is_connected(g))
    throw ScopeError("fractality is only decided for connected graphs; '" + g.name() +
                     "' is " + (g.empty() ? "empty" : "disconnected"));
  return g.edge_count() > 0 && !first_irregular_vertex(g);
}

FractalPair fractal_pair(const DirectedGraph& g) {
  if (!is_fractal(g))
    throw DomainError("graph '" + g.name() + "' is not fractal: " + *non_fractal_reason(g));
  return {max_out_degree(g), Extent::finite(g.vertex_count())};
}

std::vector<std::size_t> VertexTree::level_sizes() const {
  std::vector<std::size_t> sizes(depth + 1, 0);
  for (const auto& n : nodes) ++sizes[n.depth];
  return sizes;
}

VertexTree vertex_tree(const DirectedGraph& g, VertexIndex root, std::size_t depth,
                       std::size_t node_cap) {
  if (root >= g.vertex_count())
    throw LookupError("vertex #" + std::to_string(root) + " is not in graph '" + g.name() + "'");
  const ShadowedGraph sg(g);
  VertexTree t;
  t.root = root;
  t.depth = depth;
  t.nodes.push_back({root, std::nullopt, 0, 0, 0});
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    if (t.nodes[i].depth == depth) continue;
    const auto arcs = sg.out_arcs(t.nodes[i].vertex);
    if (t.nodes.size() + arcs.size() > node_cap)
      throw LimitError("vertex tree of '" + g.name() + "' at depth " + std::to_string(depth) +
                       " exceeds the node cap of " + std::to_string(node_cap));
    t.nodes[i].first_child = t.nodes.size();
    t.nodes[i].child_count = arcs.size();
    const std::size_t child_depth = t.nodes[i].depth + 1;
    for (auto a : arcs) t.nodes.push_back({sg.target(a), a, child_depth, 0, 0});
  }
  return t;
}

VertexTree vertex_tree(const DirectedGraph& g, std::string_view root, std::size_t depth,
                       std::size_t node_cap) {
  return vertex_tree(g, g.vertex(root), depth, node_cap);
}

bool tree_regular_to_depth(const VertexTree& t, std::size_t k) {
  return std::all_of(t.nodes.begin(), t.nodes.end(), [&](const VertexTree::Node& n) {
    return n.depth >= t.depth || n.child_count == k;
  });
}

namespace {

// AHU canonical ids: two subtrees get the same id iff they are isomorphic.
class CanonicalNames {
 public:
  std::size_t root_id(const VertexTree& t) {
    std::vector<std::size_t> id(t.nodes.size());
    for (std::size_t i = t.nodes.size(); i-- > 0;) {
      const auto& n = t.nodes[i];
      std::vector<std::size_t> children(id.begin() + n.first_child,
                                        id.begin() + n.first_child + n.child_count);
      std::sort(children.begin(), children.end());
      auto [it, inserted] = table_.try_emplace(std::move(children), table_.size());
      id[i] = it->second;
    }
    return id.empty() ? 0 : id[0];
  }

 private:
  std::map<std::vector<std::size_t>, std::size_t> table_;
};

}  // namespace

bool tree_isomorphic(const VertexTree& a, const VertexTree& b) {
  if (a.depth != b.depth)
    throw ParameterError("tree_isomorphic needs equal depths, got " + std::to_string(a.depth) +
                         " and " + std::to_string(b.depth));
  if (a.nodes.size() != b.nodes.size()) return false;
  CanonicalNames names;
  return names.root_id(a) == names.root_id(b);
}

Classification classify(std::span<const DirectedGraph> graphs) {
  std::map<SpectralClassKey, std::vector<std::string>> buckets;
  Classification result;
  for (const auto& g : graphs) {
    if (auto reason = non_fractal_reason(g)) {
      result.rejected.push_back({g.name(), *reason});
      continue;
    }
    buckets[SpectralClassKey{fractal_pair(g)}].push_back(g.name());
  }
  for (auto& [key, names] : buckets) result.classes.push_back({key, std::move(names)});
  return result;
}

}  // namespace fractaloid
