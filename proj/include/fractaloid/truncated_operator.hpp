#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include <Eigen/SparseCore>

#include "fractaloid/count.hpp"
#include "fractaloid/graph.hpp"
#include "fractaloid/groupoid.hpp"
#include "fractaloid/moments.hpp"

namespace fractaloid {

using SparseIntMatrix = Eigen::SparseMatrix<int, Eigen::ColMajor>;

/// The radial operator T_G = sum of right multiplications R_e over all
/// shadowed arcs, restricted to the span of reduced words of length <= depth
/// (vertex words included). Column w holds the images w.e; images that fall
/// outside the basis are dropped, so diagonal entries of T^n at vertex words
/// are exact for depth >= n.
class TruncatedOperator {
 public:
  TruncatedOperator(ShadowedGraph graph, std::size_t depth, std::size_t basis_cap);

  const ShadowedGraph& graph() const noexcept { return graph_; }
  std::size_t depth() const noexcept { return depth_; }
  const std::vector<ReducedWord>& basis() const noexcept { return basis_; }
  const SparseIntMatrix& matrix() const noexcept { return matrix_; }

  std::optional<std::size_t> index_of(const ReducedWord& w) const;

  /// Matrix of the single right multiplication R_a on the same basis.
  SparseIntMatrix arc_matrix(SignedEdge a) const;

  bool is_symmetric() const;

  /// T^n applied to the basis vector at `column`, in exact arithmetic.
  std::vector<Count> power_column(std::size_t column, std::size_t n) const;

  /// (T^n)[v, v] at every vertex word, packaged like radial_moment.
  MomentVector vertex_diagonal(std::size_t n) const;

 private:
  ShadowedGraph graph_;
  std::size_t depth_;
  std::vector<ReducedWord> basis_;
  std::unordered_map<ReducedWord, std::size_t, ReducedWordHash> index_;
  SparseIntMatrix matrix_;
};

/// Throws LimitError when the basis exceeds `basis_cap` words.
TruncatedOperator truncated_radial_matrix(const DirectedGraph& g, std::size_t depth,
                                          std::size_t basis_cap = kDefaultWordCap);

}  // namespace fractaloid
