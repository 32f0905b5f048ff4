#include "fractaloid/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "fractaloid/error.hpp"

namespace fractaloid {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::string_view s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  // separator so that ("ab","c") and ("a","bc") differ
  h ^= 0xff;
  h *= 1099511628211ULL;
  return h;
}

// Appends "'" until the id is unused in `used`.
std::string unique_id(std::unordered_set<std::string>& used, std::string id) {
  while (used.contains(id)) id += '\'';
  used.insert(id);
  return id;
}

}  // namespace

DirectedGraph::DirectedGraph(std::string name, std::vector<std::string> vertices,
                             const std::vector<EdgeSpec>& edges)
    : name_(std::move(name)), vertices_(std::move(vertices)) {
  vertex_lookup_.reserve(vertices_.size());
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    const auto& id = vertices_[v];
    if (id.empty()) throw StructuralError("vertex #" + std::to_string(v) + " has an empty id");
    if (!vertex_lookup_.emplace(id, v).second)
      throw StructuralError("duplicate vertex id '" + id + "'");
  }
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  edges_.reserve(edges.size());
  edge_lookup_.reserve(edges.size());
  for (const auto& spec : edges) {
    if (spec.id.empty())
      throw StructuralError("edge #" + std::to_string(edges_.size()) + " has an empty id");
    if (vertex_lookup_.contains(spec.id))
      throw StructuralError("edge id '" + spec.id + "' collides with a vertex id");
    auto src = vertex_lookup_.find(spec.src);
    if (src == vertex_lookup_.end())
      throw StructuralError("edge '" + spec.id + "' has unknown src '" + spec.src + "'");
    auto dst = vertex_lookup_.find(spec.dst);
    if (dst == vertex_lookup_.end())
      throw StructuralError("edge '" + spec.id + "' has unknown dst '" + spec.dst + "'");
    const EdgeIndex e = edges_.size();
    if (!edge_lookup_.emplace(spec.id, e).second)
      throw StructuralError("duplicate edge id '" + spec.id + "'");
    edges_.push_back({spec.id, src->second, dst->second});
    out_[src->second].push_back(e);
    in_[dst->second].push_back(e);
  }
}

EdgeSpec DirectedGraph::edge_spec(EdgeIndex e) const {
  const auto& rec = edges_.at(e);
  return {rec.id, vertices_[rec.src], vertices_[rec.dst]};
}

std::vector<EdgeSpec> DirectedGraph::edge_specs() const {
  std::vector<EdgeSpec> specs;
  specs.reserve(edges_.size());
  for (EdgeIndex e = 0; e < edges_.size(); ++e) specs.push_back(edge_spec(e));
  return specs;
}

std::optional<VertexIndex> DirectedGraph::find_vertex(std::string_view name) const {
  auto it = vertex_lookup_.find(std::string(name));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> DirectedGraph::find_edge(std::string_view id) const {
  auto it = edge_lookup_.find(std::string(id));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

VertexIndex DirectedGraph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw LookupError("unknown vertex '" + std::string(name) + "' in graph '" + name_ + "'");
}

bool DirectedGraph::has_id(std::string_view id) const {
  const std::string key(id);
  return vertex_lookup_.contains(key) || edge_lookup_.contains(key);
}

DirectedGraph DirectedGraph::renamed(std::string name) const {
  DirectedGraph copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool DirectedGraph::operator==(const DirectedGraph& other) const {
  return name_ == other.name_ && vertices_ == other.vertices_ && edges_ == other.edges_;
}

Degrees degrees(const DirectedGraph& g, VertexIndex v) {
  const std::size_t out = g.out_edges(v).size();
  const std::size_t in = g.in_edges(v).size();
  return {out, in, out + in};
}

Degrees degrees(const DirectedGraph& g, std::string_view v) { return degrees(g, g.vertex(v)); }

VertexIndex arc_source(const DirectedGraph& g, SignedEdge a) {
  const auto& e = g.edge(a.edge);
  return a.orientation == Orientation::Forward ? e.src : e.dst;
}

VertexIndex arc_target(const DirectedGraph& g, SignedEdge a) {
  const auto& e = g.edge(a.edge);
  return a.orientation == Orientation::Forward ? e.dst : e.src;
}

std::string letter_id(const DirectedGraph& g, SignedEdge a) {
  std::string id = g.edge(a.edge).id;
  if (a.orientation == Orientation::Inverse) id += '~';
  return id;
}

ShadowedGraph::ShadowedGraph(DirectedGraph base)
    : base_(std::make_shared<const DirectedGraph>(std::move(base))) {
  const auto& g = *base_;
  arcs_.reserve(2 * g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    arcs_.push_back({e, Orientation::Forward});
    arcs_.push_back({e, Orientation::Inverse});
  }
  auto by_letter = [this](SignedEdge a, SignedEdge b) { return letter_less(a, b); };
  std::sort(arcs_.begin(), arcs_.end(), by_letter);
  out_arcs_.resize(g.vertex_count());
  for (auto a : arcs_) out_arcs_[source(a)].push_back(a);

  std::uint64_t h = 14695981039346656037ULL;
  h = fnv1a(h, g.name());
  for (const auto& v : g.vertices()) h = fnv1a(h, v);
  for (const auto& e : g.edges()) {
    h = fnv1a(h, e.id);
    h = fnv1a(h, g.vertex_name(e.src));
    h = fnv1a(h, g.vertex_name(e.dst));
  }
  tag_ = h;
}

bool ShadowedGraph::letter_less(SignedEdge a, SignedEdge b) const {
  const auto& ia = base_->edge(a.edge).id;
  const auto& ib = base_->edge(b.edge).id;
  if (ia != ib) return ia < ib;
  return a.orientation < b.orientation;
}

ShadowedGraph shadow(const DirectedGraph& g) { return ShadowedGraph(g); }

DirectedGraph shadow_as_graph(const DirectedGraph& g) {
  std::unordered_set<std::string> used;
  for (const auto& v : g.vertices()) used.insert(v);
  for (const auto& e : g.edges()) used.insert(e.id);
  std::vector<EdgeSpec> edges = g.edge_specs();
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    auto spec = g.edge_spec(e);
    edges.push_back({unique_id(used, spec.id + "~"), spec.dst, spec.src});
  }
  return DirectedGraph(g.name() + "^", g.vertices(), edges);
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "loops" || name == "one-vertex-loops") return Family::OneVertexLoops;
  if (name == "circulant") return Family::Circulant;
  if (name == "complete") return Family::Complete;
  if (name == "path" || name == "linear-path") return Family::LinearPath;
  if (name == "tree" || name == "two-vertex-tree") return Family::TwoVertexTree;
  return std::nullopt;
}

std::string_view family_name(Family kind) {
  switch (kind) {
    case Family::OneVertexLoops: return "loops";
    case Family::Circulant: return "circulant";
    case Family::Complete: return "complete";
    case Family::LinearPath: return "path";
    case Family::TwoVertexTree: return "tree";
  }
  return "unknown";
}

DirectedGraph family(Family kind, std::size_t n) {
  const std::size_t minimum =
      (kind == Family::Circulant || kind == Family::Complete) ? 2 : 1;
  if (n < minimum)
    throw ParameterError("family '" + std::string(family_name(kind)) + "' requires n >= " +
                         std::to_string(minimum) + ", got " + std::to_string(n));
  auto v = [](std::size_t j) { return "v" + std::to_string(j); };
  auto e = [](std::size_t j) { return "e" + std::to_string(j); };
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::string name;
  switch (kind) {
    case Family::OneVertexLoops:
      name = "O" + std::to_string(n);
      vertices = {"v"};
      for (std::size_t j = 1; j <= n; ++j) edges.push_back({e(j), "v", "v"});
      break;
    case Family::Circulant:
      name = "K" + std::to_string(n);
      for (std::size_t j = 1; j <= n; ++j) vertices.push_back(v(j));
      for (std::size_t j = 1; j <= n; ++j) edges.push_back({e(j), v(j), v(j % n + 1)});
      break;
    case Family::Complete:
      name = "C" + std::to_string(n);
      for (std::size_t j = 1; j <= n; ++j) vertices.push_back(v(j));
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
          if (i != j)
            edges.push_back({"e" + std::to_string(i) + "_" + std::to_string(j), v(i), v(j)});
      break;
    case Family::LinearPath:
      name = "P" + std::to_string(n);
      for (std::size_t j = 1; j <= n; ++j) vertices.push_back(v(j));
      for (std::size_t j = 1; j < n; ++j) edges.push_back({e(j), v(j), v(j + 1)});
      break;
    case Family::TwoVertexTree:
      name = "T" + std::to_string(n) + ",1";
      for (std::size_t j = 1; j <= n + 1; ++j) vertices.push_back(v(j));
      for (std::size_t j = 1; j <= n; ++j) edges.push_back({e(j), "v1", v(j + 1)});
      break;
  }
  return DirectedGraph(std::move(name), std::move(vertices), edges);
}

DirectedGraph regularize(const DirectedGraph& g, std::size_t k) {
  if (k < 1) throw ParameterError("regularize requires k >= 1");
  std::vector<EdgeSpec> edges;
  edges.reserve(g.edge_count() * k);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto spec = g.edge_spec(e);
    for (std::size_t j = 1; j <= k; ++j)
      edges.push_back({spec.id + "#" + std::to_string(j), spec.src, spec.dst});
  }
  return DirectedGraph("R" + std::to_string(k) + "(" + g.name() + ")", g.vertices(), edges);
}

DirectedGraph glue(const DirectedGraph& g1, std::string_view v1, const DirectedGraph& g2,
                   std::string_view v2) {
  const VertexIndex glued1 = g1.vertex(v1);
  const VertexIndex glued2 = g2.vertex(v2);

  std::unordered_set<std::string> used;
  for (const auto& v : g1.vertices()) used.insert(v);
  for (const auto& e : g1.edges()) used.insert(e.id);

  std::vector<std::string> vertices = g1.vertices();
  std::vector<std::string> rename(g2.vertex_count());
  for (VertexIndex v = 0; v < g2.vertex_count(); ++v) {
    if (v == glued2) {
      rename[v] = g1.vertex_name(glued1);
      continue;
    }
    rename[v] = unique_id(used, g2.vertex_name(v));
    vertices.push_back(rename[v]);
  }
  std::vector<EdgeSpec> edges = g1.edge_specs();
  for (const auto& e : g2.edges())
    edges.push_back({unique_id(used, e.id), rename[e.src], rename[e.dst]});
  return DirectedGraph(g1.name() + "#" + g2.name(), std::move(vertices), edges);
}

DirectedGraph iterated_glue_loops(const DirectedGraph& g, std::size_t n) {
  std::unordered_set<std::string> used;
  for (const auto& v : g.vertices()) used.insert(v);
  for (const auto& e : g.edges()) used.insert(e.id);
  std::vector<EdgeSpec> edges = g.edge_specs();
  for (const auto& v : g.vertices())
    for (std::size_t j = 1; j <= n; ++j)
      edges.push_back({unique_id(used, v + ".l" + std::to_string(j)), v, v});
  return DirectedGraph(g.name() + "#O" + std::to_string(n), g.vertices(), edges);
}

bool is_connected(const DirectedGraph& g) {
  if (g.empty()) return false;
  std::vector<VertexIndex> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), VertexIndex{0});
  auto find = [&](VertexIndex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = g.vertex_count();
  for (const auto& e : g.edges()) {
    auto a = find(e.src), b = find(e.dst);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace fractaloid
