#include "fractaloid/truncated_operator.hpp"

namespace fractaloid {

TruncatedOperator::TruncatedOperator(ShadowedGraph graph, std::size_t depth,
                                     std::size_t basis_cap)
    : graph_(std::move(graph)),
      depth_(depth),
      basis_(enumerate_words(graph_, depth, basis_cap)) {
  index_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);

  std::vector<Eigen::Triplet<int>> entries;
  for (std::size_t col = 0; col < basis_.size(); ++col) {
    for (auto a : graph_.out_arcs(basis_[col].range())) {
      const auto image = multiply(graph_, basis_[col], ReducedWord::letter(graph_, a));
      if (auto row = index_of(image))
        entries.emplace_back(static_cast<int>(*row), static_cast<int>(col), 1);
    }
  }
  const auto n = static_cast<Eigen::Index>(basis_.size());
  matrix_.resize(n, n);
  matrix_.setFromTriplets(entries.begin(), entries.end());
}

std::optional<std::size_t> TruncatedOperator::index_of(const ReducedWord& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseIntMatrix TruncatedOperator::arc_matrix(SignedEdge a) const {
  std::vector<Eigen::Triplet<int>> entries;
  const auto letter = ReducedWord::letter(graph_, a);
  for (std::size_t col = 0; col < basis_.size(); ++col) {
    const auto image = multiply(graph_, basis_[col], letter);
    if (image.is_empty()) continue;
    if (auto row = index_of(image))
      entries.emplace_back(static_cast<int>(*row), static_cast<int>(col), 1);
  }
  SparseIntMatrix m(matrix_.rows(), matrix_.cols());
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

bool TruncatedOperator::is_symmetric() const {
  const SparseIntMatrix transposed = matrix_.transpose();
  const SparseIntMatrix diff = matrix_ - transposed;
  for (Eigen::Index k = 0; k < diff.outerSize(); ++k)
    for (SparseIntMatrix::InnerIterator it(diff, k); it; ++it)
      if (it.value() != 0) return false;
  return true;
}

std::vector<Count> TruncatedOperator::power_column(std::size_t column, std::size_t n) const {
  std::vector<Count> x(basis_.size(), 0);
  x.at(column) = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<Count> y(basis_.size(), 0);
    for (Eigen::Index col = 0; col < matrix_.outerSize(); ++col) {
      const Count& weight = x[static_cast<std::size_t>(col)];
      if (weight == 0) continue;
      for (SparseIntMatrix::InnerIterator it(matrix_, col); it; ++it)
        y[static_cast<std::size_t>(it.row())] += weight * it.value();
    }
    x = std::move(y);
  }
  return x;
}

MomentVector TruncatedOperator::vertex_diagonal(std::size_t n) const {
  const auto& g = graph_.base();
  MomentVector m;
  m.n = n;
  m.vertices = g.vertices();
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const std::size_t col = *index_of(ReducedWord::vertex(graph_, v));
    m.values.push_back(power_column(col, n)[col]);
  }
  return m;
}

TruncatedOperator truncated_radial_matrix(const DirectedGraph& g, std::size_t depth,
                                          std::size_t basis_cap) {
  return TruncatedOperator(ShadowedGraph(g), depth, basis_cap);
}

}  // namespace fractaloid
