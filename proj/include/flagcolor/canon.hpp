#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "flagcolor/graph.hpp"

namespace flagcolor {

/// Certificate of a colored graph up to color-preserving isomorphism.
/// Colors are compared by id, not up to permutation of ids.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }
  std::string hex() const;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  std::string bytes_;
};

struct CanonicalForm {
  CanonicalKey key;
  /// labeling[i] is the vertex placed at canonical position i.
  std::vector<Vertex> labeling;
  /// Smallest vertex of each vertex's automorphism orbit, as far as the
  /// search discovered it (always a sound under-approximation).
  std::vector<Vertex> orbit;
  std::size_t generators = 0;
  std::size_t leaves = 0;
};

/// Individualization-refinement canonical labeling: equitable color
/// refinement with branching on the first non-singleton cell, pruned by
/// discovered automorphisms. Cells made of mutual twins are split without
/// branching.
CanonicalForm canonical_form(const ColoredGraph& g);

inline CanonicalKey canonical_key(const ColoredGraph& g) { return canonical_form(g).key; }
inline CanonicalKey canonical_key(const Position& p) { return canonical_form(p.graph()).key; }

/// Certificate bytes of `g` relabeled so that position i holds labeling[i].
std::string certificate(const ColoredGraph& g, std::span<const Vertex> labeling);

/// The graph relabeled into canonical order (vertex i = labeling[i]).
ColoredGraph relabel(const ColoredGraph& g, std::span<const Vertex> labeling);

}  // namespace flagcolor

template <>
struct std::hash<flagcolor::CanonicalKey> {
  std::size_t operator()(const flagcolor::CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes());
  }
};
