#pragma once

// Brute-force reference implementations for tests. Nothing here calls the
// library's move, contraction or canonical-labeling code.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "flagcolor/graph.hpp"
#include "flagcolor/reduction.hpp"

namespace oracle {

/// Adjacency-matrix colored graph.
struct Small {
  std::vector<int> color;
  std::vector<std::vector<bool>> adj;

  int size() const { return static_cast<int>(color.size()); }
};

Small from_graph(const flagcolor::ColoredGraph& g);
flagcolor::ColoredGraph to_graph(const Small& s);

bool connected(const Small& s);
bool proper(const Small& s);

/// Quotient by monochromatic components.
Small contract(const Small& s);
/// Recolor v with c and contract.
Small play(const Small& s, int v, int c);

/// Canonical string by minimizing over all vertex permutations (n <= 8).
std::string brute_key(const Small& s);
/// Smallest key after also renaming color ids in order of first use.
std::string brute_key_normalized(const Small& s);

/// Plain game-tree Grundy value, memoized on the labeled graph only.
std::uint32_t grundy(const Small& s);

/// Connected, properly colored graphs on n vertices using colors exactly
/// 0..k-1 for some k <= colors, one per brute_key.
std::vector<Small> all_positions(int n, int colors);

/// Random connected graph on n vertices with a proper coloring from
/// `colors` colors (recolored until proper).
Small random_position(std::mt19937& rng, int n, int colors);
/// Random connected graph with arbitrary (possibly improper) colors.
Small random_colored(std::mt19937& rng, int n, int colors);

/// AVOID TRUE by full game-tree recursion without memoization.
bool avoid_true_first_player_wins(unsigned k, const std::vector<std::vector<unsigned>>& clauses,
                                  std::vector<bool> assignment);

}  // namespace oracle
