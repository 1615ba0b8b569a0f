#include "flagcolor/flags.hpp"

#include <array>
#include <string>

#include "assets.hpp"
#include "flagcolor/io.hpp"

namespace flagcolor {

namespace {

constexpr std::array<FlagId, 5> kFlags = {FlagId::us, FlagId::azores, FlagId::canada,
                                          FlagId::france, FlagId::maine};

}  // namespace

std::span<const FlagId> all_flags() { return kFlags; }

std::string_view to_string(FlagId id) {
  switch (id) {
    case FlagId::us: return "us";
    case FlagId::azores: return "azores";
    case FlagId::canada: return "canada";
    case FlagId::france: return "france";
    case FlagId::maine: return "maine";
  }
  return "";
}

std::optional<FlagId> parse_flag_id(std::string_view name) {
  for (FlagId id : kFlags) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

std::string_view flag_source(FlagId id) {
  return detail::asset("flag_" + std::string(to_string(id)));
}

Position flag_position(FlagId id) { return parse_graph(flag_source(id)); }

FlagReport flag_report(FlagId id, const FlagReportOptions& options) {
  const Position p = flag_position(id);
  Solver solver(options.solver);
  FlagReport r;
  r.id = id;
  r.vertices = p.vertex_count();
  r.colors = p.color_count();
  if (options.compute_grundy) {
    r.grundy = solver.grundy(p);
    r.outcome = outcome_of(*r.grundy);
  } else {
    r.outcome = solver.outcome(p);
  }
  if (options.compute_winning_moves) r.winning_moves = solver.winning_moves(p);
  r.stats = solver.stats();
  return r;
}

}  // namespace flagcolor
