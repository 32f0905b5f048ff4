#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fractaloid/graph.hpp"

namespace fractaloid {

/// An element of the graph groupoid: the absorbing empty element, a vertex
/// (unit), or a reduced admissible path over the shadowed graph. Words
/// remember the fingerprint of the graph they were built over.
///
/// Path invariants: consecutive letters are composable and no letter is
/// immediately followed by its own shadow.
class ReducedWord {
 public:
  enum class Kind : std::uint8_t { Empty, Vertex, Path };

  static ReducedWord empty(const ShadowedGraph& g);
  static ReducedWord vertex(const ShadowedGraph& g, VertexIndex v);
  static ReducedWord letter(const ShadowedGraph& g, SignedEdge a);

  Kind kind() const noexcept { return kind_; }
  bool is_empty() const noexcept { return kind_ == Kind::Empty; }
  bool is_vertex() const noexcept { return kind_ == Kind::Vertex; }
  bool is_path() const noexcept { return kind_ == Kind::Path; }

  /// Number of letters; zero for vertices and the empty element.
  std::size_t length() const noexcept { return letters_.size(); }
  std::span<const SignedEdge> letters() const noexcept { return letters_; }

  /// Defined for non-empty words.
  VertexIndex source() const noexcept { return source_; }
  VertexIndex range() const noexcept { return range_; }

  std::uint64_t graph_tag() const noexcept { return tag_; }

  bool operator==(const ReducedWord&) const = default;

  std::size_t hash() const noexcept;

 private:
  friend ReducedWord reduce(const ShadowedGraph&, std::span<const SignedEdge>);
  friend ReducedWord multiply(const ShadowedGraph&, const ReducedWord&, const ReducedWord&);
  friend ReducedWord inverse(const ReducedWord&);
  friend std::vector<ReducedWord> enumerate_words(const ShadowedGraph&, std::size_t, std::size_t);

  std::uint64_t tag_ = 0;
  Kind kind_ = Kind::Empty;
  VertexIndex source_ = 0;
  VertexIndex range_ = 0;
  std::vector<SignedEdge> letters_;
};

struct ReducedWordHash {
  std::size_t operator()(const ReducedWord& w) const noexcept { return w.hash(); }
};

/// Stack reduction of a raw letter sequence: a letter followed by its own
/// shadow cancels to the vertex it started from. Any non-composable junction
/// yields Empty. Throws StructuralError for letters outside the graph and
/// ParameterError for an empty sequence.
ReducedWord reduce(const ShadowedGraph& g, std::span<const SignedEdge> letters);

/// Groupoid product. Both factors are reduced already, so cancellation only
/// happens across the junction. Throws StructuralError when an operand was
/// built over a different graph.
ReducedWord multiply(const ShadowedGraph& g, const ReducedWord& lhs, const ReducedWord& rhs);

/// Reverses the path and flips every letter; vertices and Empty are fixed.
ReducedWord inverse(const ReducedWord& w);

/// (source, range); absent for Empty.
std::optional<std::pair<VertexIndex, VertexIndex>> source_range(const ReducedWord& w);

inline constexpr std::size_t kDefaultWordCap = 1'000'000;

/// All vertex words followed by every reduced path of length 1..max_len,
/// in shortlex order of letter ids. Throws LimitError once more than
/// `cap` words would be produced.
std::vector<ReducedWord> enumerate_words(const ShadowedGraph& g, std::size_t max_len,
                                         std::size_t cap = kDefaultWordCap);

/// "(v)" for vertices, "e1.e2~" for paths, "0" for Empty.
std::string to_string(const ShadowedGraph& g, const ReducedWord& w);

enum class EdgeBlockType { LoopBlock, NonLoopBlock };

/// Loop edges generate a copy of L(Z); non-loop edges a copy of M_2(C).
EdgeBlockType edge_block_type(const EdgeRecord& e);

std::string_view to_string(EdgeBlockType t);

}  // namespace fractaloid
