#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fractaloid/graph.hpp"

namespace fractaloid {

struct IsomorphismOptions {
  std::size_t max_vertices = 16;
  std::size_t max_search_nodes = 1'000'000;
};

/// Witness of a graph isomorphism G1 -> G2: vertex_map[v] is the image of
/// vertex v, edge_map[e] the image of edge e. Sources and targets are
/// preserved edge by edge.
struct GraphIsomorphism {
  std::vector<VertexIndex> vertex_map;
  std::vector<EdgeIndex> edge_map;
};

/// Exact backtracking search over degree-compatible vertex maps with
/// edge-multiplicity checks. Throws LimitError when either graph exceeds
/// max_vertices or the search visits more than max_search_nodes states.
std::optional<GraphIsomorphism> graph_isomorphic(const DirectedGraph& g1, const DirectedGraph& g2,
                                                 const IsomorphismOptions& options = {});

/// Checks that `iso` really is an isomorphism g1 -> g2.
bool is_valid_isomorphism(const DirectedGraph& g1, const DirectedGraph& g2,
                          const GraphIsomorphism& iso);

}  // namespace fractaloid
