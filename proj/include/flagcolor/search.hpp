#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagcolor/graph.hpp"

namespace flagcolor {

struct SearchConfig {
  std::size_t max_vertices = 1;
  std::size_t color_count = 2;
  /// spectrum() also writes its JSON report here when set.
  std::optional<std::string> report_path;
  /// Lifts the vertex guard; sizes past it can run for hours.
  bool unsafe_no_guard = false;
  /// 0 = hardware concurrency.
  unsigned threads = 1;
};

/// Largest max_vertices accepted without unsafe_no_guard.
std::size_t guard_limit(std::size_t color_count);

/// Throws Error(invalid_spec) for max_vertices < 1 or color_count < 2, and
/// Error(guard_exceeded) past guard_limit.
void validate(const SearchConfig& cfg);

/// Every connected, properly colored position with at most max_vertices
/// vertices whose color ids are exactly 0..k-1 for some k <= color_count,
/// once per canonical key. Ordered by vertex count, then key.
std::vector<Position> enumerate_positions(const SearchConfig& cfg);

struct SizeReport {
  std::size_t vertices = 0;
  std::size_t positions = 0;
  /// Positions counted once per class under permutations of color ids.
  std::size_t swap_merged = 0;
  std::map<std::uint32_t, std::size_t> histogram;
  std::uint32_t max_grundy = 0;
  /// Graph-format text of the smallest-key position attaining max_grundy.
  std::string witness;
  /// Positions isomorphic to some generated family member.
  std::size_t family_shaped = 0;

  friend bool operator==(const SizeReport&, const SizeReport&) = default;
};

struct SpectrumReport {
  std::size_t max_vertices = 0;
  std::size_t color_count = 0;
  std::vector<SizeReport> sizes;
  std::uint32_t max_grundy = 0;
  /// "<family>: engine *a, oracle *b" for each family-shaped disagreement.
  std::vector<std::string> family_mismatches;
  /// Soft findings, such as values above the expected bound.
  std::vector<std::string> warnings;

  friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

/// Largest value a search is expected to observe; exceeding it is a warning.
inline constexpr std::uint32_t kExpectedGrundyBound = 13;

SpectrumReport spectrum(const SearchConfig& cfg);

std::string format_text(const SpectrumReport& r);
std::string format_json(const SpectrumReport& r);

}  // namespace flagcolor
