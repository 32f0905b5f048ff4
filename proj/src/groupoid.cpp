#include "fractaloid/groupoid.hpp"

#include <algorithm>

#include "fractaloid/error.hpp"

namespace fractaloid {

namespace {

void check_tag(const ShadowedGraph& g, const ReducedWord& w) {
  if (w.graph_tag() != g.tag())
    throw StructuralError("word " + std::string(w.is_empty() ? "0" : "operand") +
                          " belongs to a different graph than '" + g.base().name() + "'");
}

void check_letter(const ShadowedGraph& g, SignedEdge a) {
  if (a.edge >= g.base().edge_count())
    throw StructuralError("letter refers to edge #" + std::to_string(a.edge) +
                          ", graph '" + g.base().name() + "' has " +
                          std::to_string(g.base().edge_count()) + " edges");
}

}  // namespace

ReducedWord ReducedWord::empty(const ShadowedGraph& g) {
  ReducedWord w;
  w.tag_ = g.tag();
  return w;
}

ReducedWord ReducedWord::vertex(const ShadowedGraph& g, VertexIndex v) {
  if (v >= g.base().vertex_count())
    throw LookupError("vertex #" + std::to_string(v) + " is not in graph '" + g.base().name() + "'");
  ReducedWord w;
  w.tag_ = g.tag();
  w.kind_ = Kind::Vertex;
  w.source_ = w.range_ = v;
  return w;
}

ReducedWord ReducedWord::letter(const ShadowedGraph& g, SignedEdge a) {
  check_letter(g, a);
  ReducedWord w;
  w.tag_ = g.tag();
  w.kind_ = Kind::Path;
  w.source_ = g.source(a);
  w.range_ = g.target(a);
  w.letters_.push_back(a);
  return w;
}

std::size_t ReducedWord::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(tag_) ^ (static_cast<std::size_t>(kind_) << 1);
  auto mix = [&h](std::size_t x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  mix(source_);
  mix(range_);
  for (auto a : letters_) mix(a.edge * 2 + static_cast<std::size_t>(a.orientation));
  return h;
}

ReducedWord reduce(const ShadowedGraph& g, std::span<const SignedEdge> letters) {
  if (letters.empty()) throw ParameterError("reduce needs at least one letter");
  for (auto a : letters) check_letter(g, a);

  ReducedWord w;
  w.tag_ = g.tag();
  w.source_ = g.source(letters.front());
  VertexIndex at = w.source_;
  for (auto a : letters) {
    if (g.source(a) != at) return ReducedWord::empty(g);
    if (!w.letters_.empty() && w.letters_.back().is_inverse_of(a))
      w.letters_.pop_back();
    else
      w.letters_.push_back(a);
    at = g.target(a);
  }
  w.range_ = at;
  w.kind_ = w.letters_.empty() ? ReducedWord::Kind::Vertex : ReducedWord::Kind::Path;
  return w;
}

ReducedWord multiply(const ShadowedGraph& g, const ReducedWord& lhs, const ReducedWord& rhs) {
  check_tag(g, lhs);
  check_tag(g, rhs);
  if (lhs.is_empty() || rhs.is_empty() || lhs.range() != rhs.source())
    return ReducedWord::empty(g);
  if (lhs.is_vertex()) return rhs;
  if (rhs.is_vertex()) return lhs;

  const auto left = lhs.letters();
  const auto right = rhs.letters();
  std::size_t keep = left.size();
  std::size_t skip = 0;
  while (keep > 0 && skip < right.size() && left[keep - 1].is_inverse_of(right[skip])) {
    --keep;
    ++skip;
  }
  ReducedWord w;
  w.tag_ = g.tag();
  w.source_ = lhs.source();
  w.range_ = rhs.range();
  w.letters_.reserve(keep + right.size() - skip);
  w.letters_.insert(w.letters_.end(), left.begin(), left.begin() + keep);
  w.letters_.insert(w.letters_.end(), right.begin() + skip, right.end());
  w.kind_ = w.letters_.empty() ? ReducedWord::Kind::Vertex : ReducedWord::Kind::Path;
  return w;
}

ReducedWord inverse(const ReducedWord& w) {
  if (!w.is_path()) return w;
  ReducedWord r = w;
  std::reverse(r.letters_.begin(), r.letters_.end());
  for (auto& a : r.letters_) a = a.inverse();
  std::swap(r.source_, r.range_);
  return r;
}

std::optional<std::pair<VertexIndex, VertexIndex>> source_range(const ReducedWord& w) {
  if (w.is_empty()) return std::nullopt;
  return std::pair{w.source(), w.range()};
}

std::vector<ReducedWord> enumerate_words(const ShadowedGraph& g, std::size_t max_len,
                                         std::size_t cap) {
  std::vector<ReducedWord> words;
  auto push = [&](ReducedWord w) {
    if (words.size() >= cap)
      throw LimitError("word enumeration of '" + g.base().name() + "' up to length " +
                       std::to_string(max_len) + " exceeds the cap of " + std::to_string(cap));
    words.push_back(std::move(w));
  };
  for (VertexIndex v = 0; v < g.base().vertex_count(); ++v) push(ReducedWord::vertex(g, v));
  if (max_len == 0) return words;

  std::size_t layer_begin = words.size();
  for (auto a : g.arcs()) push(ReducedWord::letter(g, a));
  for (std::size_t len = 2; len <= max_len; ++len) {
    const std::size_t layer_end = words.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (auto a : g.out_arcs(words[i].range())) {
        if (words[i].letters().back().is_inverse_of(a)) continue;
        ReducedWord w = words[i];
        w.letters_.push_back(a);
        w.range_ = g.target(a);
        push(std::move(w));
      }
    }
    layer_begin = layer_end;
  }
  return words;
}

std::string to_string(const ShadowedGraph& g, const ReducedWord& w) {
  switch (w.kind()) {
    case ReducedWord::Kind::Empty: return "0";
    case ReducedWord::Kind::Vertex: return "(" + g.base().vertex_name(w.source()) + ")";
    case ReducedWord::Kind::Path: break;
  }
  std::string out;
  for (auto a : w.letters()) {
    if (!out.empty()) out += '.';
    out += g.letter_id(a);
  }
  return out;
}

EdgeBlockType edge_block_type(const EdgeRecord& e) {
  return e.is_loop() ? EdgeBlockType::LoopBlock : EdgeBlockType::NonLoopBlock;
}

std::string_view to_string(EdgeBlockType t) {
  return t == EdgeBlockType::LoopBlock ? "loop" : "non-loop";
}

}  // namespace fractaloid
