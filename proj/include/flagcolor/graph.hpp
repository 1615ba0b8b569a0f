#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flagcolor {

using Vertex = std::uint32_t;
using ColorId = std::uint8_t;

inline constexpr std::size_t kMaxColors = 255;

struct Edge {
  Vertex u;
  Vertex v;
};

/// Display names indexed by color id. An empty string means "unnamed" and
/// the numeric id is shown instead.
using Palette = std::shared_ptr<const std::vector<std::string>>;

/// Immutable simple graph with one color per vertex, stored as sorted
/// adjacency arrays. Parallel edges passed to the constructor are merged.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  /// Throws Error(self_loop) or Error(unknown_vertex) for malformed edges.
  ColoredGraph(std::vector<ColorId> colors, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return colors_.size(); }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

  ColorId color(Vertex v) const { return colors_[v]; }
  std::span<const ColorId> colors() const noexcept { return colors_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  std::vector<Edge> edges() const;

  bool is_connected() const;
  bool is_properly_colored() const;
  std::size_t color_count() const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  friend class GraphAssembler;

  std::vector<ColorId> colors_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

/// Connected, properly colored graph in contracted form: the game state.
///
/// Color ids are normalized on construction by order-preserving compaction,
/// so the ids in use are always 0..k-1 and palette entries follow them.
class Position {
 public:
  /// Single uncolored vertex (color 0): the terminal position.
  Position();

  /// Validates that `graph` is properly colored and connected.
  /// Throws Error(disconnected) or Error(invalid_spec) otherwise.
  explicit Position(ColoredGraph graph, Palette palette = {});

  const ColoredGraph& graph() const noexcept { return graph_; }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  bool is_terminal() const noexcept { return graph_.vertex_count() == 1; }
  ColorId color(Vertex v) const { return graph_.color(v); }
  std::size_t color_count() const noexcept { return color_count_; }

  const Palette& palette() const noexcept { return palette_; }
  /// Display name of a color id: palette entry or the decimal id.
  std::string color_name(ColorId c) const;

 private:
  struct Trusted {};
  Position(Trusted, ColoredGraph graph, Palette palette);
  friend Position apply_move_unchecked(const Position&, Vertex, ColorId);
  friend Position contract(const ColoredGraph&, Palette);

  ColoredGraph graph_;
  Palette palette_;
  std::size_t color_count_ = 1;
};

struct Move {
  Vertex vertex;
  ColorId new_color;

  friend auto operator<=>(const Move&, const Move&) = default;
};

/// Quotient by monochromatic connected components. Vertex order of the
/// result follows the smallest original vertex of each component.
/// Throws Error(disconnected) if `graph` is not connected.
Position contract(const ColoredGraph& graph, Palette palette = {});

/// Every (v, c') with c' the color of some neighbor of v, ordered by vertex
/// then color id.
std::vector<Move> legal_moves(const Position& p);

/// Throws Error(illegal_move) unless `m` is in legal_moves(p).
Position apply_move(const Position& p, Move m);

/// apply_move without the legality check; `c` must be a neighbor color of `v`.
Position apply_move_unchecked(const Position& p, Vertex v, ColorId c);

/// Same graph with vertices renamed: vertex v of `p` becomes perm[v].
Position permute(const Position& p, std::span<const Vertex> perm);

/// Same graph with color ids remapped by `color_map` (must be a permutation
/// of the ids in use).
Position recolor(const Position& p, std::span<const ColorId> color_map);

}  // namespace flagcolor
