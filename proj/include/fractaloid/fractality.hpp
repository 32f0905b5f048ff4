#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fractaloid/graph.hpp"

namespace fractaloid {

/// A count in N ∪ {∞}. Only the finite variant is produced by this library;
/// the infinite one exists so classification keys cover the whole range.
class Extent {
 public:
  static constexpr Extent finite(std::uint64_t n) { return Extent(false, n); }
  static constexpr Extent infinite() { return Extent(true, 0); }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr std::uint64_t value() const noexcept { return value_; }

  constexpr auto operator<=>(const Extent& o) const noexcept {
    if (infinite_ != o.infinite_) return infinite_ <=> o.infinite_;
    return value_ <=> o.value_;
  }
  constexpr bool operator==(const Extent&) const = default;

  std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  constexpr Extent(bool inf, std::uint64_t v) : infinite_(inf), value_(v) {}
  bool infinite_;
  std::uint64_t value_;
};

/// (N0, N^0): the common out/in degree and the number of vertices.
struct FractalPair {
  std::uint64_t n_zero = 1;
  Extent n_sup = Extent::finite(1);

  auto operator<=>(const FractalPair&) const = default;
  bool operator==(const FractalPair&) const = default;

  std::string str() const { return "(" + std::to_string(n_zero) + ", " + n_sup.str() + ")"; }
};

struct SpectralClassKey {
  FractalPair pair;

  auto operator<=>(const SpectralClassKey&) const = default;
  bool operator==(const SpectralClassKey&) const = default;
};

/// Maximum out-degree in G (not in the shadowed graph). Throws
/// ParameterError for the empty graph.
std::size_t max_out_degree(const DirectedGraph& g);

/// First vertex whose out- and in-degree are not both equal to
/// max_out_degree(g), if any.
std::optional<VertexIndex> first_irregular_vertex(const DirectedGraph& g);

/// A connected graph with at least one edge is fractal iff every vertex has
/// out-degree = in-degree = max_out_degree. Throws ScopeError for
/// disconnected (or empty) graphs.
bool is_fractal(const DirectedGraph& g);

/// Throws DomainError naming the first offending vertex for non-fractal
/// input, ScopeError for disconnected input.
FractalPair fractal_pair(const DirectedGraph& g);

/// Depth-bounded unfolding of the shadowed graph from a root vertex. Nodes
/// are stored breadth first; the children of a node are contiguous.
struct VertexTree {
  struct Node {
    VertexIndex vertex = 0;
    std::optional<SignedEdge> arc;  // arc from the parent; absent at the root
    std::size_t depth = 0;
    std::size_t first_child = 0;
    std::size_t child_count = 0;
  };

  VertexIndex root = 0;
  std::size_t depth = 0;
  std::vector<Node> nodes;

  /// Number of nodes at each depth 0..depth.
  std::vector<std::size_t> level_sizes() const;
};

inline constexpr std::size_t kDefaultTreeNodeCap = 4'000'000;

/// Every node labelled u gets one child per shadowed out-arc of u (in letter
/// order), down to `depth`. Vertex labels may repeat. Throws LimitError when
/// more than `node_cap` nodes would be built.
VertexTree vertex_tree(const DirectedGraph& g, VertexIndex root, std::size_t depth,
                       std::size_t node_cap = kDefaultTreeNodeCap);
VertexTree vertex_tree(const DirectedGraph& g, std::string_view root, std::size_t depth,
                       std::size_t node_cap = kDefaultTreeNodeCap);

/// True iff every node above the last level has exactly k children.
bool tree_regular_to_depth(const VertexTree& t, std::size_t k);

/// Unlabelled rooted-tree isomorphism via canonical child signatures.
/// Throws ParameterError when the depths differ.
bool tree_isomorphic(const VertexTree& a, const VertexTree& b);

struct Classification {
  struct Bucket {
    SpectralClassKey key;
    std::vector<std::string> graphs;
  };
  struct Reject {
    std::string graph;
    std::string reason;
  };

  std::vector<Bucket> classes;  // ordered by key; graphs in input order
  std::vector<Reject> rejected;  // input order
};

/// Buckets fractal graphs by fractal pair; everything else is rejected with
/// a reason.
Classification classify(std::span<const DirectedGraph> graphs);

/// Why `g` is not fractal, or nullopt when it is.
std::optional<std::string> non_fractal_reason(const DirectedGraph& g);

}  // namespace fractaloid
