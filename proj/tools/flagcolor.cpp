#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "flagcolor/error.hpp"
#include "flagcolor/families.hpp"
#include "flagcolor/flags.hpp"
#include "flagcolor/io.hpp"
#include "flagcolor/reduction.hpp"
#include "flagcolor/search.hpp"
#include "flagcolor/solver.hpp"

namespace fc = flagcolor;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;
constexpr int kResourceError = 3;

constexpr std::size_t kTableVertexGuard = 60;

struct Common {
  unsigned threads = 0;
  bool json = false;
  std::string format;
};

fc::SolverOptions solver_options(const Common& c) {
  fc::SolverOptions o;
  o.threads = c.threads;
  if (const char* cap = std::getenv("FLAGCOLOR_MEMO_CAP")) {
    std::size_t value = 0;
    std::string_view s(cap);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw fc::Error(fc::ErrorCode::syntax, "FLAGCOLOR_MEMO_CAP must be a non-negative integer");
    }
    o.memo_cap = value;
  }
  return o;
}

fc::Position load(const std::string& path, const Common& c) {
  std::optional<fc::InputFormat> format;
  if (c.format == "graph") format = fc::InputFormat::graph;
  else if (c.format == "grid") format = fc::InputFormat::grid;
  else if (c.format == "json") format = fc::InputFormat::json;
  else if (!c.format.empty()) throw fc::Error(fc::ErrorCode::syntax, "unknown format '" + c.format + "'");
  if (!format) format = fc::format_from_path(path);
  if (!format) format = fc::InputFormat::graph;
  return fc::parse_position(fc::read_file(path), *format);
}

json stats_json(const fc::SolverStats& s) {
  return {{"nodes", s.nodes},
          {"canonizations", s.canonizations},
          {"grundy_table", {{"entries", s.grundy_table.entries}, {"hits", s.grundy_table.hits}, {"misses", s.grundy_table.misses}}},
          {"outcome_table", {{"entries", s.outcome_table.entries}, {"hits", s.outcome_table.hits}, {"misses", s.outcome_table.misses}}}};
}

std::string stats_text(const fc::SolverStats& s) {
  std::ostringstream out;
  out << "nodes " << s.nodes << ", canonizations " << s.canonizations << ", grundy table "
      << s.grundy_table.entries << " entries (" << s.grundy_table.hits << " hits), outcome table "
      << s.outcome_table.entries << " entries (" << s.outcome_table.hits << " hits)";
  return out.str();
}

json move_json(const fc::Position& p, fc::Move m) {
  return {{"vertex", m.vertex}, {"from", p.color_name(p.color(m.vertex))}, {"to", p.color_name(m.new_color)}};
}

// --- value / outcome / moves ------------------------------------------------

int cmd_value(const std::string& path, const Common& c) {
  const fc::Position p = load(path, c);
  fc::Solver solver(solver_options(c));
  const fc::Nimber g = solver.grundy(p);
  if (c.json) {
    std::cout << json{{"vertices", p.vertex_count()},
                      {"colors", p.color_count()},
                      {"grundy", g.value},
                      {"nimber", fc::to_string(g)},
                      {"outcome", fc::to_string(fc::outcome_of(g))},
                      {"stats", stats_json(solver.stats())}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "value " << fc::to_string(g) << "\noutcome " << fc::to_string(fc::outcome_of(g)) << "\n"
              << stats_text(solver.stats()) << "\n";
  }
  return kOk;
}

int cmd_outcome(const std::string& path, const Common& c) {
  const fc::Position p = load(path, c);
  fc::Solver solver(solver_options(c));
  const fc::Outcome o = solver.outcome(p);
  if (c.json) {
    std::cout << json{{"outcome", fc::to_string(o)}, {"stats", stats_json(solver.stats())}}.dump(2) << "\n";
  } else {
    std::cout << "outcome " << fc::to_string(o) << "\n" << stats_text(solver.stats()) << "\n";
  }
  return kOk;
}

int cmd_moves(const std::string& path, bool with_values, const Common& c) {
  const fc::Position p = load(path, c);
  fc::Solver solver(solver_options(c));
  json j;
  if (with_values) {
    const auto values = solver.option_values(p);
    j["options"] = json::array();
    for (const auto& mv : values) {
      json m = move_json(p, mv.move);
      m["value"] = mv.value.value;
      j["options"].push_back(m);
      if (!c.json) std::cout << fc::format_move(p, mv.move) << "  " << fc::to_string(mv.value) << "\n";
    }
  }
  const auto winning = solver.winning_moves(p);
  j["winning_moves"] = json::array();
  for (const fc::Move& m : winning) j["winning_moves"].push_back(move_json(p, m));
  if (c.json) {
    j["stats"] = stats_json(solver.stats());
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "winning moves (" << winning.size() << "):\n";
    for (const fc::Move& m : winning) std::cout << "  " << fc::format_move(p, m) << "\n";
  }
  return kOk;
}

// --- table -----------------------------------------------------------------

struct Range {
  unsigned lo = 0;
  unsigned hi = 0;
};

Range parse_range(const std::string& s) {
  auto number = [&](std::string_view t) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
      throw fc::Error(fc::ErrorCode::syntax, "bad range '" + s + "' (expected a or a..b)");
    }
    return v;
  };
  const auto dots = s.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = number(s);
  } else {
    r.lo = number(std::string_view(s).substr(0, dots));
    r.hi = number(std::string_view(s).substr(dots + 2));
  }
  if (r.lo > r.hi) throw fc::Error(fc::ErrorCode::syntax, "empty range '" + s + "'");
  return r;
}

struct TableArgs {
  std::string family;
  std::map<std::string, std::string> ranges;
};

struct Cell {
  std::string engine;
  std::string oracle;
  bool match = true;
  bool erratum = false;
  bool skipped = false;
};

int cmd_table(const TableArgs& args, const Common& c) {
  const std::string& f = args.family;
  auto range = [&](const std::string& name, const char* fallback) {
    auto it = args.ranges.find(name);
    return parse_range(it != args.ranges.end() && !it->second.empty() ? it->second : fallback);
  };

  std::string row_name;
  std::string col_name;
  Range rows;
  Range cols{0, 0};
  Range ks{0, 0};
  std::optional<std::pair<fc::Parity, fc::Endpoints>> route;
  if (f == "star") {
    row_name = "i";
    rows = range("i", "0..10");
  } else if (f == "path") {
    row_name = "x";
    rows = range("x", "0..12");
  } else if (f == "diamond") {
    row_name = "p", col_name = "d";
    rows = range("p", "0..4"), cols = range("d", "0..4");
  } else if (f == "broom") {
    row_name = "i", col_name = "l";
    rows = range("i", "0..4"), cols = range("l", "0..5");
  } else if (f == "bipartite") {
    row_name = "m", col_name = "n";
    rows = range("m", "1..4"), cols = range("n", "1..4");
    if (rows.lo == 0 || cols.lo == 0) throw fc::Error(fc::ErrorCode::invalid_spec, "bipartite sides start at 1");
  } else if (f.rfind("route-", 0) == 0) {
    const std::string cat = f.substr(6);
    for (fc::Parity p : {fc::Parity::even, fc::Parity::odd}) {
      for (fc::Endpoints e : {fc::Endpoints::merged, fc::Endpoints::adjacent, fc::Endpoints::distinct}) {
        if (fc::category_name(p, e) == cat) route = {p, e};
      }
    }
    if (!route || (route->first == fc::Parity::odd && route->second == fc::Endpoints::merged) ||
        (route->first == fc::Parity::even && route->second == fc::Endpoints::adjacent)) {
      throw fc::Error(fc::ErrorCode::syntax,
                      "unknown route category '" + cat + "' (even-merged, odd-adjacent, even-distinct, odd-distinct)");
    }
    row_name = "i", col_name = "j";
    rows = range("i", "0..3"), cols = range("j", "0..3");
    const bool even = route->first == fc::Parity::even;
    ks = even ? range("k", route->second == fc::Endpoints::merged ? "1" : "0") : Range{0, 0};
  } else {
    throw fc::Error(fc::ErrorCode::syntax, "unknown family '" + f + "'");
  }

  fc::Solver solver(solver_options(c));
  json out{{"family", f}, {"tables", json::array()}};
  std::size_t mismatches = 0;
  std::size_t errata = 0;
  for (unsigned k = ks.lo; k <= ks.hi; ++k) {
    std::vector<std::vector<Cell>> grid;
    json cells = json::array();
    for (unsigned r = rows.lo; r <= rows.hi; ++r) {
      grid.emplace_back();
      for (unsigned q = cols.lo; q <= cols.hi; ++q) {
        Cell cell;
        fc::FamilySpec spec;
        std::optional<fc::RouteCategory> cat;
        if (f == "star") spec = fc::Star{r};
        else if (f == "path") spec = fc::Path{r};
        else if (f == "diamond") spec = fc::Diamond{r, q};
        else if (f == "broom") spec = fc::Broom{r, q};
        else if (f == "bipartite") spec = fc::CompleteBipartite{r, q};
        else {
          cat = fc::RouteCategory{route->first, route->second, r, q, k};
          const bool empty = r + q + k == 0;
          if (empty && route->second != fc::Endpoints::adjacent) {
            cell.skipped = true;
            grid.back().push_back(cell);
            continue;
          }
          spec = fc::route_of(*cat);
        }
        if (fc::vertex_count(spec) > kTableVertexGuard) {
          throw fc::Error(fc::ErrorCode::guard_exceeded, fc::describe(spec) + " has more than " +
                                                             std::to_string(kTableVertexGuard) + " vertices");
        }
        const fc::Position p = fc::build(spec);
        json entry{{"spec", fc::describe(spec)}};
        if (f == "bipartite") {
          const fc::Outcome engine = solver.outcome(p);
          const fc::Outcome oracle = fc::oracle_outcome(spec);
          cell.engine = fc::to_string(engine);
          cell.oracle = fc::to_string(oracle);
          cell.match = engine == oracle;
          entry["engine"] = cell.engine;
          entry["oracle"] = cell.oracle;
        } else {
          const fc::Nimber engine = solver.grundy(p);
          const fc::Nimber oracle = cat ? fc::route_value(*cat) : *fc::oracle_value(spec);
          cell.engine = fc::to_string(engine);
          cell.oracle = fc::to_string(oracle);
          cell.match = engine == oracle;
          cell.erratum = !cell.match && cat && fc::corrected_route_value(*cat) == engine;
          entry["engine"] = engine.value;
          entry["oracle"] = oracle.value;
        }
        entry["match"] = cell.match;
        entry["erratum"] = cell.erratum;
        if (!cell.match) (cell.erratum ? errata : mismatches)++;
        cells.push_back(entry);
        grid.back().push_back(cell);
      }
    }
    if (c.json) {
      json t{{"cells", cells}};
      if (route && route->first == fc::Parity::even) t["k"] = k;
      out["tables"].push_back(t);
      continue;
    }
    auto print = [&](const char* title, bool engine) {
      std::cout << title;
      if (route && route->first == fc::Parity::even) std::cout << " (k=" << k << ")";
      std::cout << "\n" << (col_name.empty() ? row_name : row_name + "\\" + col_name);
      for (unsigned q = cols.lo; q <= cols.hi; ++q) {
        std::cout << "\t" << (col_name.empty() ? std::string("value") : std::to_string(q));
      }
      std::cout << "\n";
      for (unsigned r = rows.lo; r <= rows.hi; ++r) {
        std::cout << r;
        for (const Cell& cell : grid[r - rows.lo]) {
          std::string text = cell.skipped ? "-" : engine ? cell.engine : cell.oracle;
          if (engine && !cell.match) text += cell.erratum ? "e" : "!";
          std::cout << "\t" << text;
        }
        std::cout << "\n";
      }
    };
    print("engine", true);
    print("table", false);
  }
  if (c.json) {
    out["mismatches"] = mismatches;
    out["errata"] = errata;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << mismatches << " mismatches, " << errata << " errata-listed\n";
  }
  return mismatches == 0 ? kOk : kMismatch;
}

// --- play ------------------------------------------------------------------

void show(const fc::Position& p) {
  for (fc::Vertex v = 0; v < p.vertex_count(); ++v) {
    std::cout << "  " << v << " " << p.color_name(p.color(v)) << ":";
    for (fc::Vertex w : p.graph().neighbors(v)) std::cout << " " << w;
    std::cout << "\n";
  }
}

std::optional<fc::Move> parse_move(const fc::Position& p, const std::string& line) {
  std::istringstream in(line);
  unsigned long v = 0;
  std::string color;
  std::string extra;
  if (!(in >> v >> color) || (in >> extra) || v >= p.vertex_count()) return std::nullopt;
  for (const fc::Move& m : fc::legal_moves(p)) {
    if (m.vertex != v) continue;
    if (p.color_name(m.new_color) == color || std::to_string(m.new_color) == color) return m;
  }
  return std::nullopt;
}

int cmd_play(const std::string& path, bool engine_replies, const Common& c) {
  fc::Position p = load(path, c);
  fc::Solver solver(solver_options(c));
  int to_move = 1;
  int last_mover = 0;
  auto announce_end = [&] {
    if (last_mover == 0) {
      std::cout << "no moves available: player 1 cannot move and loses\n";
    } else {
      std::cout << "game over: player " << last_mover << " made the last move and wins\n";
    }
  };
  auto play = [&](fc::Move m) {
    std::cout << "player " << to_move << " plays " << fc::format_move(p, m) << "\n";
    p = fc::apply_move(p, m);
    last_mover = to_move;
    to_move = 3 - to_move;
  };
  std::cout << "commands: <vertex> <color> | moves | hint | values | quit\n";
  std::string line;
  while (true) {
    show(p);
    if (p.is_terminal()) {
      announce_end();
      return kOk;
    }
    std::cout << "player " << to_move << "> " << std::flush;
    if (!std::getline(std::cin, line)) {
      std::cout << "\n";
      return kOk;
    }
    if (line == "quit") return kOk;
    if (line == "moves") {
      for (const fc::Move& m : fc::legal_moves(p)) std::cout << "  " << fc::format_move(p, m) << "\n";
      continue;
    }
    if (line == "hint") {
      const auto winning = solver.winning_moves(p);
      if (winning.empty()) std::cout << "  no winning move: every option is an N-position\n";
      for (const fc::Move& m : winning) std::cout << "  " << fc::format_move(p, m) << "\n";
      continue;
    }
    if (line == "values") {
      for (const auto& mv : solver.option_values(p)) {
        std::cout << "  " << fc::format_move(p, mv.move) << "  " << fc::to_string(mv.value) << "\n";
      }
      continue;
    }
    const auto m = parse_move(p, line);
    if (!m) {
      std::cout << "  not a legal move; type 'moves' for the list\n";
      continue;
    }
    play(*m);
    if (engine_replies && !p.is_terminal()) {
      const auto winning = solver.winning_moves(p);
      play(winning.empty() ? fc::legal_moves(p).front() : winning.front());
    }
  }
}

// --- flag / reduce / correspond / search / export ---------------------------

int cmd_flag(const std::string& name, bool grundy, bool no_moves, const Common& c) {
  const auto id = fc::parse_flag_id(name);
  if (!id) throw fc::Error(fc::ErrorCode::syntax, "unknown flag '" + name + "' (us, azores, canada, france, maine)");
  fc::FlagReportOptions o;
  o.compute_grundy = grundy;
  o.compute_winning_moves = !no_moves;
  o.solver = solver_options(c);
  const fc::FlagReport r = fc::flag_report(*id, o);
  const fc::Position p = fc::flag_position(*id);
  if (c.json) {
    json j{{"flag", fc::to_string(*id)}, {"vertices", r.vertices}, {"colors", r.colors}, {"outcome", fc::to_string(r.outcome)}};
    if (r.grundy) j["grundy"] = r.grundy->value;
    if (!no_moves) {
      j["winning_moves"] = json::array();
      for (const fc::Move& m : r.winning_moves) j["winning_moves"].push_back(move_json(p, m));
    }
    j["stats"] = stats_json(r.stats);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << fc::to_string(*id) << ": " << r.vertices << " vertices, " << r.colors << " colors\noutcome "
              << fc::to_string(r.outcome) << "\n";
    if (r.grundy) std::cout << "value " << fc::to_string(*r.grundy) << "\n";
    if (!no_moves) {
      std::cout << "winning moves (" << r.winning_moves.size() << "):\n";
      for (const fc::Move& m : r.winning_moves) std::cout << "  " << fc::format_move(p, m) << "\n";
    }
    std::cout << stats_text(r.stats) << "\n";
  }
  return kOk;
}

int cmd_reduce(const std::string& path, const std::string& output) {
  const fc::PositiveCnf f = fc::parse_cnf(fc::read_file(path));
  const fc::ReductionGadget g = fc::build_reduction(f);
  std::string text = fc::format_graph(g.position);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream file(output);
    if (!file || !(file << text)) throw fc::Error(fc::ErrorCode::io, "cannot write " + output);
  }
  std::cerr << g.position.vertex_count() << " vertices, " << g.clause_nodes.size() << " clause nodes\n";
  return kOk;
}

int cmd_correspond(const std::string& path, const Common& c) {
  const fc::PositiveCnf f = fc::parse_cnf(fc::read_file(path));
  const fc::ReductionGadget g = fc::build_reduction(f);
  fc::SolverOptions o = solver_options(c);
  const fc::CorrespondenceReport r = fc::correspondence_check(f, o);
  auto moves = [&](const std::vector<fc::FirstMove>& ms, bool variable) {
    json a = json::array();
    for (const fc::FirstMove& m : ms) {
      json e = move_json(g.position, m.move);
      e["role"] = fc::describe(m.role);
      e["outcome"] = fc::to_string(m.outcome);
      if (variable) e["legal_in_avoid_true"] = m.legal_in_avoid_true;
      a.push_back(e);
    }
    return a;
  };
  if (c.json) {
    std::cout << json{{"variables", f.variable_count},
                      {"clauses", f.clauses.size()},
                      {"vertices", g.position.vertex_count()},
                      {"avoid_true_outcome", fc::to_string(r.avoid_true)},
                      {"game_outcome", fc::to_string(r.game)},
                      {"outcomes_equal", r.avoid_true == r.game},
                      {"variable_moves", moves(r.variable_moves, true)},
                      {"other_moves", moves(r.other_moves, false)},
                      {"non_variable_moves_all_n", r.non_variable_moves_all_n},
                      {"variable_moves_biject", r.variable_moves_biject}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "AVOID TRUE outcome " << fc::to_string(r.avoid_true) << "\nG(A) outcome " << fc::to_string(r.game)
              << " (" << g.position.vertex_count() << " vertices)\nvariable moves:\n";
    for (const fc::FirstMove& m : r.variable_moves) {
      std::cout << "  " << fc::describe(m.role) << " -> " << fc::to_string(m.outcome)
                << (m.legal_in_avoid_true ? "  (legal in A)" : "  (illegal in A)") << "\n";
    }
    std::size_t n_count = 0;
    for (const fc::FirstMove& m : r.other_moves) n_count += m.outcome == fc::Outcome::N;
    std::cout << "non-variable moves: " << r.other_moves.size() << ", of which " << n_count << " yield N\n"
              << "every non-variable move yields N: " << (r.non_variable_moves_all_n ? "yes" : "no") << "\n";
  }
  return r.non_variable_moves_all_n && r.variable_moves_biject ? kOk : kMismatch;
}

int cmd_search(fc::SearchConfig cfg, const Common& c) {
  cfg.threads = c.threads;
  const fc::SpectrumReport r = fc::spectrum(cfg);
  std::cout << (c.json ? fc::format_json(r) : fc::format_text(r));
  for (const std::string& w : r.warnings) std::cerr << "warning: " << w << "\n";
  return r.family_mismatches.empty() ? kOk : kMismatch;
}

int cmd_export(const std::string& path, const std::string& to, const std::string& output, const Common& c) {
  const fc::Position p = load(path, c);
  std::string text;
  if (to == "dot") text = fc::format_dot(p);
  else if (to == "json") text = fc::format_json(p);
  else if (to == "graph") text = fc::format_graph(p);
  else throw fc::Error(fc::ErrorCode::syntax, "unknown export format '" + to + "' (dot, json, graph)");
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream file(output);
    if (!file || !(file << text)) throw fc::Error(fc::ErrorCode::io, "cannot write " + output);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flagcolor: Sprague-Grundy analysis of the FLAG COLORING game"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "Solver threads (0 = all cores)")->capture_default_str();
  app.add_flag("--json", common.json, "Machine-readable output");
  app.add_option("--format", common.format, "Input format: graph, grid or json (default: by extension)");
  std::string path;
  std::function<int()> run;

  auto file_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("file", path, "Position file")->required();
    return sub;
  };

  file_command("value", "Grundy value and outcome")->callback([&] { run = [&] { return cmd_value(path, common); }; });
  file_command("outcome", "Outcome class via win/loss search")->callback([&] {
    run = [&] { return cmd_outcome(path, common); };
  });
  bool with_values = false;
  CLI::App* moves = file_command("moves", "Winning moves");
  moves->add_flag("--values", with_values, "Also list every option value");
  moves->callback([&] { run = [&] { return cmd_moves(path, with_values, common); }; });

  TableArgs table_args;
  CLI::App* table = app.add_subcommand("table", "Engine table next to the closed form");
  table->fallthrough();
  table->add_option("family", table_args.family,
                    "star, path, diamond, broom, bipartite, route-even-merged, route-odd-adjacent, "
                    "route-even-distinct, route-odd-distinct")
      ->required();
  for (const char* p : {"i", "j", "k", "l", "p", "d", "x", "m", "n"}) {
    table->add_option(std::string("--") + p, table_args.ranges[p], std::string("Range for ") + p + " (a or a..b)");
  }
  table->callback([&] { run = [&] { return cmd_table(table_args, common); }; });

  bool engine_replies = false;
  CLI::App* play = file_command("play", "Interactive game");
  play->add_flag("--engine", engine_replies, "Engine answers each move");
  play->callback([&] { run = [&] { return cmd_play(path, engine_replies, common); }; });

  std::string flag_name;
  bool flag_grundy = false;
  bool flag_no_moves = false;
  CLI::App* flag = app.add_subcommand("flag", "Report for a built-in flag");
  flag->fallthrough();
  flag->add_option("id", flag_name, "us, azores, canada, france or maine")->required();
  flag->add_flag("--grundy", flag_grundy, "Compute the full Grundy value");
  flag->add_flag("--no-moves", flag_no_moves, "Skip the winning-move list");
  flag->callback([&] { run = [&] { return cmd_flag(flag_name, flag_grundy, flag_no_moves, common); }; });

  std::string output;
  CLI::App* reduce = app.add_subcommand("reduce", "Build G(A) from a positive CNF");
  reduce->fallthrough();
  reduce->add_option("cnf", path, "Positive DIMACS file")->required();
  reduce->add_option("-o,--output", output, "Graph file to write (default: stdout)");
  reduce->callback([&] { run = [&] { return cmd_reduce(path, output); }; });

  CLI::App* correspond = app.add_subcommand("correspond", "Compare AVOID TRUE with G(A)");
  correspond->fallthrough();
  correspond->add_option("cnf", path, "Positive DIMACS file")->required();
  correspond->callback([&] { run = [&] { return cmd_correspond(path, common); }; });

  fc::SearchConfig search_cfg;
  std::string report;
  CLI::App* search = app.add_subcommand("search", "Grundy spectrum of all small positions");
  search->fallthrough();
  search->add_option("--max-n", search_cfg.max_vertices, "Largest vertex count")->required();
  search->add_option("--colors", search_cfg.color_count, "Number of colors")->capture_default_str();
  search->add_flag("--unsafe-no-guard", search_cfg.unsafe_no_guard, "Allow sizes past the guard (slow)");
  search->add_option("--report", report, "Also write the JSON report to this file");
  search->callback([&] {
    if (!report.empty()) search_cfg.report_path = report;
    run = [&] { return cmd_search(search_cfg, common); };
  });

  std::string to = "dot";
  CLI::App* export_dot = file_command("export-dot", "Graphviz DOT text");
  export_dot->add_option("-o,--output", output, "File to write (default: stdout)");
  export_dot->callback([&] { run = [&] { return cmd_export(path, "dot", output, common); }; });
  CLI::App* export_cmd = file_command("export", "Convert a position to another format");
  export_cmd->add_option("--to", to, "dot, json or graph")->capture_default_str();
  export_cmd->add_option("-o,--output", output, "File to write (default: stdout)");
  export_cmd->callback([&] { run = [&] { return cmd_export(path, to, output, common); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  try {
    return run();
  } catch (const fc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return fc::is_input_error(e.code()) ? kInputError : kResourceError;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kResourceError;
  }
}
