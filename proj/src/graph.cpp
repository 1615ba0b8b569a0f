#include "flagcolor/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "flagcolor/error.hpp"
#include "graph_assembler.hpp"

namespace flagcolor {

ColoredGraph GraphAssembler::assemble(std::vector<ColorId> colors,
                                      std::vector<std::vector<Vertex>> lists) {
  ColoredGraph g;
  g.colors_ = std::move(colors);
  g.offsets_.assign(1, 0);
  g.offsets_.reserve(lists.size() + 1);
  std::size_t total = 0;
  for (const auto& l : lists) total += l.size();
  g.adjacency_.reserve(total);
  for (auto& l : lists) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    g.adjacency_.insert(g.adjacency_.end(), l.begin(), l.end());
    g.offsets_.push_back(static_cast<std::uint32_t>(g.adjacency_.size()));
  }
  return g;
}

ColoredGraph::ColoredGraph(std::vector<ColorId> colors, std::span<const Edge> edges) {
  const std::size_t n = colors.size();
  std::vector<std::vector<Vertex>> lists(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::unknown_vertex,
                  "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                      " refers to a vertex >= " + std::to_string(n));
    }
    if (e.u == e.v) throw Error(ErrorCode::self_loop, "vertex " + std::to_string(e.u));
    lists[e.u].push_back(e.v);
    lists[e.v].push_back(e.u);
  }
  *this = GraphAssembler::assemble(std::move(colors), std::move(lists));
}

bool ColoredGraph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> ColoredGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

bool ColoredGraph::is_connected() const {
  const std::size_t n = vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

bool ColoredGraph::is_properly_colored() const {
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex w : neighbors(u)) {
      if (colors_[u] == colors_[w]) return false;
    }
  }
  return true;
}

std::size_t ColoredGraph::color_count() const {
  std::vector<char> used(256, 0);
  std::size_t count = 0;
  for (ColorId c : colors_) {
    if (!used[c]) {
      used[c] = 1;
      ++count;
    }
  }
  return count;
}

namespace {

// Order-preserving compaction of color ids; returns the remapped palette.
Palette normalize_colors(std::vector<ColorId>& colors, const Palette& palette,
                         std::size_t& color_count) {
  std::array<int, 256> remap;
  remap.fill(-1);
  for (ColorId c : colors) remap[c] = 0;
  int next = 0;
  bool identity = true;
  for (int c = 0; c < 256; ++c) {
    if (remap[c] < 0) continue;
    if (c != next) identity = false;
    remap[c] = next++;
  }
  color_count = static_cast<std::size_t>(next);
  if (identity) return palette;
  for (ColorId& c : colors) c = static_cast<ColorId>(remap[c]);
  if (!palette) return palette;
  auto names = std::make_shared<std::vector<std::string>>(color_count);
  for (int c = 0; c < 256; ++c) {
    if (remap[c] >= 0 && static_cast<std::size_t>(c) < palette->size()) {
      (*names)[remap[c]] = (*palette)[c];
    }
  }
  return names;
}

ColoredGraph normalized(ColoredGraph g, Palette& palette, std::size_t& color_count) {
  std::vector<ColorId> colors(g.colors().begin(), g.colors().end());
  Palette mapped = normalize_colors(colors, palette, color_count);
  if (std::equal(colors.begin(), colors.end(), g.colors().begin())) {
    palette = std::move(mapped);
    return g;
  }
  palette = std::move(mapped);
  std::vector<std::vector<Vertex>> lists(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    lists[v].assign(nb.begin(), nb.end());
  }
  return GraphAssembler::assemble(std::move(colors), std::move(lists));
}

}  // namespace

Position::Position() : graph_(std::vector<ColorId>{0}, std::span<const Edge>{}) {}

Position::Position(ColoredGraph graph, Palette palette) {
  if (graph.vertex_count() == 0) throw Error(ErrorCode::invalid_spec, "empty graph");
  if (!graph.is_connected()) throw Error(ErrorCode::disconnected, "position must be connected");
  if (!graph.is_properly_colored()) {
    throw Error(ErrorCode::invalid_spec, "position must be properly colored (contract it first)");
  }
  graph_ = normalized(std::move(graph), palette, color_count_);
  palette_ = std::move(palette);
}

Position::Position(Trusted, ColoredGraph graph, Palette palette) {
  graph_ = normalized(std::move(graph), palette, color_count_);
  palette_ = std::move(palette);
}

std::string Position::color_name(ColorId c) const {
  if (palette_ && c < palette_->size() && !(*palette_)[c].empty()) return (*palette_)[c];
  return std::to_string(c);
}

Position contract(const ColoredGraph& graph, Palette palette) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) throw Error(ErrorCode::invalid_spec, "empty graph");
  if (!graph.is_connected()) throw Error(ErrorCode::disconnected, "cannot contract a disconnected graph");

  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w : graph.neighbors(u)) {
      if (u < w && graph.color(u) == graph.color(w)) {
        Vertex a = find(u), b = find(w);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  // Roots are the smallest member of their class, so numbering roots in
  // increasing order keeps the original vertex order.
  std::vector<Vertex> index(n);
  std::vector<ColorId> colors;
  for (Vertex u = 0; u < n; ++u) {
    if (find(u) == u) {
      index[u] = static_cast<Vertex>(colors.size());
      colors.push_back(graph.color(u));
    }
  }
  std::vector<std::vector<Vertex>> lists(colors.size());
  for (Vertex u = 0; u < n; ++u) {
    Vertex cu = index[find(u)];
    for (Vertex w : graph.neighbors(u)) {
      Vertex cw = index[find(w)];
      if (cu != cw) lists[cu].push_back(cw);
    }
  }
  return Position(Position::Trusted{},
                  GraphAssembler::assemble(std::move(colors), std::move(lists)),
                  std::move(palette));
}

std::vector<Move> legal_moves(const Position& p) {
  const ColoredGraph& g = p.graph();
  std::vector<Move> moves;
  std::vector<ColorId> seen;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    seen.clear();
    for (Vertex w : g.neighbors(v)) seen.push_back(g.color(w));
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (ColorId c : seen) moves.push_back({v, c});
  }
  return moves;
}

Position apply_move(const Position& p, Move m) {
  const ColoredGraph& g = p.graph();
  bool legal = false;
  if (m.vertex < g.vertex_count() && m.new_color != g.color(m.vertex)) {
    for (Vertex w : g.neighbors(m.vertex)) {
      if (g.color(w) == m.new_color) {
        legal = true;
        break;
      }
    }
  }
  if (!legal) {
    throw Error(ErrorCode::illegal_move, "vertex " + std::to_string(m.vertex) + " to color " +
                                             std::to_string(m.new_color));
  }
  return apply_move_unchecked(p, m.vertex, m.new_color);
}

Position apply_move_unchecked(const Position& p, Vertex v, ColorId c) {
  const ColoredGraph& g = p.graph();
  const std::size_t n = g.vertex_count();
  constexpr Vertex kMerged = static_cast<Vertex>(-1);

  // v absorbs every neighbor of color c; the rest keep their relative order.
  std::vector<Vertex> index(n, 0);
  for (Vertex w : g.neighbors(v)) {
    if (g.color(w) == c) index[w] = kMerged;
  }
  Vertex next = 0;
  Vertex merged = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (index[u] == kMerged) continue;
    if (u == v) merged = next;
    index[u] = next++;
  }
  for (Vertex w : g.neighbors(v)) {
    if (g.color(w) == c) index[w] = merged;
  }

  std::vector<ColorId> colors(next);
  std::vector<std::vector<Vertex>> lists(next);
  for (Vertex u = 0; u < n; ++u) {
    Vertex iu = index[u];
    colors[iu] = (iu == merged) ? c : g.color(u);
    for (Vertex w : g.neighbors(u)) {
      Vertex iw = index[w];
      if (iw != iu) lists[iu].push_back(iw);
    }
  }
  return Position(Position::Trusted{},
                  GraphAssembler::assemble(std::move(colors), std::move(lists)), p.palette());
}

Position permute(const Position& p, std::span<const Vertex> perm) {
  const ColoredGraph& g = p.graph();
  std::vector<ColorId> colors(g.vertex_count());
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    colors[perm[u]] = g.color(u);
    for (Vertex w : g.neighbors(u)) {
      if (u < w) edges.push_back({perm[u], perm[w]});
    }
  }
  return Position(ColoredGraph(std::move(colors), edges), p.palette());
}

Position recolor(const Position& p, std::span<const ColorId> color_map) {
  const ColoredGraph& g = p.graph();
  std::vector<ColorId> colors(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u) colors[u] = color_map[g.color(u)];
  Palette names;
  if (p.palette()) {
    auto mapped = std::make_shared<std::vector<std::string>>(p.palette()->size());
    for (std::size_t c = 0; c < p.palette()->size() && c < color_map.size(); ++c) {
      if (color_map[c] < mapped->size()) (*mapped)[color_map[c]] = (*p.palette())[c];
    }
    names = std::move(mapped);
  }
  auto edges = g.edges();
  return Position(ColoredGraph(std::move(colors), edges), std::move(names));
}

}  // namespace flagcolor
