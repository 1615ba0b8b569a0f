#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "flagcolor/graph.hpp"
#include "flagcolor/solver.hpp"

namespace flagcolor {

enum class FlagId { us, azores, canada, france, maine };

std::span<const FlagId> all_flags();
std::string_view to_string(FlagId id);
std::optional<FlagId> parse_flag_id(std::string_view name);

/// Embedded graph-format source of a flag.
std::string_view flag_source(FlagId id);
Position flag_position(FlagId id);

struct FlagReportOptions {
  bool compute_grundy = false;
  bool compute_winning_moves = true;
  SolverOptions solver;
};

struct FlagReport {
  FlagId id = FlagId::us;
  std::size_t vertices = 0;
  std::size_t colors = 0;
  Outcome outcome = Outcome::P;
  std::optional<Nimber> grundy;
  std::vector<Move> winning_moves;
  SolverStats stats;
};

/// Solver errors (capacity, overflow) propagate.
FlagReport flag_report(FlagId id, const FlagReportOptions& options = {});

}  // namespace flagcolor
