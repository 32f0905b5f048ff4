#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fractaloid {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

/// Name-based edge description, used to build graphs and in the JSON form.
struct EdgeSpec {
  std::string id;
  std::string src;
  std::string dst;

  bool operator==(const EdgeSpec&) const = default;
};

/// A resolved edge: endpoints are indices into the owning graph's vertex list.
struct EdgeRecord {
  std::string id;
  VertexIndex src = 0;
  VertexIndex dst = 0;

  bool is_loop() const noexcept { return src == dst; }
  bool operator==(const EdgeRecord&) const = default;
};

/// Finite directed multigraph. Loops and parallel edges are ordinary edges
/// with their own ids. Vertex and edge ids share one namespace and keep
/// their declaration order. Immutable once constructed.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  /// Validates and builds the graph; throws StructuralError on empty or
  /// duplicate ids and on edges whose endpoints are not declared.
  DirectedGraph(std::string name, std::vector<std::string> vertices,
                const std::vector<EdgeSpec>& edges);

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<EdgeRecord>& edges() const noexcept { return edges_; }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  const std::string& vertex_name(VertexIndex v) const { return vertices_.at(v); }
  const EdgeRecord& edge(EdgeIndex e) const { return edges_.at(e); }
  EdgeSpec edge_spec(EdgeIndex e) const;
  std::vector<EdgeSpec> edge_specs() const;

  std::optional<VertexIndex> find_vertex(std::string_view name) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;
  /// Throws LookupError for an undeclared vertex.
  VertexIndex vertex(std::string_view name) const;

  std::span<const EdgeIndex> out_edges(VertexIndex v) const { return out_.at(v); }
  std::span<const EdgeIndex> in_edges(VertexIndex v) const { return in_.at(v); }

  /// True when `id` is already used by a vertex or an edge.
  bool has_id(std::string_view id) const;

  DirectedGraph renamed(std::string name) const;

  bool operator==(const DirectedGraph& other) const;

 private:
  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<EdgeRecord> edges_;
  std::unordered_map<std::string, VertexIndex> vertex_lookup_;
  std::unordered_map<std::string, EdgeIndex> edge_lookup_;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<std::vector<EdgeIndex>> in_;
};

struct Degrees {
  std::size_t out = 0;
  std::size_t in = 0;
  std::size_t total = 0;

  bool operator==(const Degrees&) const = default;
};

Degrees degrees(const DirectedGraph& g, VertexIndex v);
/// Throws LookupError for an undeclared vertex.
Degrees degrees(const DirectedGraph& g, std::string_view v);

enum class Orientation : std::uint8_t { Forward, Inverse };

/// An edge of the shadowed graph: either e itself or its shadow e^-1.
struct SignedEdge {
  EdgeIndex edge = 0;
  Orientation orientation = Orientation::Forward;

  SignedEdge inverse() const noexcept {
    return {edge, orientation == Orientation::Forward ? Orientation::Inverse
                                                      : Orientation::Forward};
  }
  bool is_inverse_of(SignedEdge other) const noexcept {
    return edge == other.edge && orientation != other.orientation;
  }
  auto operator<=>(const SignedEdge&) const = default;
};

VertexIndex arc_source(const DirectedGraph& g, SignedEdge a);
VertexIndex arc_target(const DirectedGraph& g, SignedEdge a);

/// Display id of an arc: the edge id, with a trailing '~' for the shadow.
std::string letter_id(const DirectedGraph& g, SignedEdge a);

/// The shadowed graph: the base graph together with every reversed edge.
/// Cheap to copy; the base graph is shared.
class ShadowedGraph {
 public:
  explicit ShadowedGraph(DirectedGraph base);

  const DirectedGraph& base() const noexcept { return *base_; }

  /// All 2|E| arcs, ordered by letter id.
  std::span<const SignedEdge> arcs() const noexcept { return arcs_; }
  /// Arcs leaving v (out-edges plus shadows of in-edges), ordered by letter id.
  std::span<const SignedEdge> out_arcs(VertexIndex v) const { return out_arcs_.at(v); }

  VertexIndex source(SignedEdge a) const { return arc_source(*base_, a); }
  VertexIndex target(SignedEdge a) const { return arc_target(*base_, a); }
  std::string letter_id(SignedEdge a) const { return fractaloid::letter_id(*base_, a); }

  /// Compares two arcs by their letter ids.
  bool letter_less(SignedEdge a, SignedEdge b) const;

  /// Structural fingerprint of the base graph; words remember it so that
  /// mixing letters of different graphs is caught.
  std::uint64_t tag() const noexcept { return tag_; }

 private:
  std::shared_ptr<const DirectedGraph> base_;
  std::vector<SignedEdge> arcs_;
  std::vector<std::vector<SignedEdge>> out_arcs_;
  std::uint64_t tag_ = 0;
};

ShadowedGraph shadow(const DirectedGraph& g);

/// The shadowed graph flattened back into a plain directed graph: every edge
/// `e` plus a reversed copy with id `e~`.
DirectedGraph shadow_as_graph(const DirectedGraph& g);

enum class Family { OneVertexLoops, Circulant, Complete, LinearPath, TwoVertexTree };

/// Named graph families.
///   OneVertexLoops O_n: one vertex, n loops.
///   Circulant K_n:      v_j -> v_{j+1} cyclically (n >= 2).
///   Complete C_n:       one edge per ordered pair of distinct vertices (n >= 2).
///   LinearPath P_n:     n vertices, n-1 chain edges.
///   TwoVertexTree:      root with n out-edges to leaves; n = 1 is the
///                       two-vertex one-edge graph, n = 2 is T_{2,1}.
DirectedGraph family(Family kind, std::size_t n);

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family kind);

/// R_k(G): every edge replaced by k parallel copies with ids "<id>#1".."<id>#k".
DirectedGraph regularize(const DirectedGraph& g, std::size_t k);

/// Identifies v1 of g1 with v2 of g2. The glued vertex keeps v1's name;
/// ids of g2 that clash with ids of g1 get a "'" suffix until unique.
DirectedGraph glue(const DirectedGraph& g1, std::string_view v1,
                   const DirectedGraph& g2, std::string_view v2);

/// G #^v O_n: n fresh loops "<vertex>.l1".."<vertex>.ln" at every vertex.
DirectedGraph iterated_glue_loops(const DirectedGraph& g, std::size_t n);

/// Connectivity of the underlying undirected multigraph; false when empty.
bool is_connected(const DirectedGraph& g);

}  // namespace fractaloid
