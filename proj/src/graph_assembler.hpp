#pragma once

#include <vector>

#include "flagcolor/graph.hpp"

namespace flagcolor {

// Builds a ColoredGraph directly from per-vertex neighbor lists (sorted and
// deduplicated here). Lists must be symmetric and loop-free.
class GraphAssembler {
 public:
  static ColoredGraph assemble(std::vector<ColorId> colors, std::vector<std::vector<Vertex>> lists);
};

}  // namespace flagcolor
