#include "flagcolor/reduction.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <unordered_map>

#include "flagcolor/error.hpp"

namespace flagcolor {

namespace {

constexpr ColorId kWhite = 0;
constexpr ColorId kBlack = 1;

std::optional<long long> parse_int(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::uint64_t mask_of(const PositiveCnf& f) {
  std::uint64_t m = 0;
  for (unsigned v = 0; v < f.variable_count; ++v) {
    if (f.assignment[v]) m |= std::uint64_t{1} << v;
  }
  return m;
}

bool satisfied(const std::vector<std::uint64_t>& clause_masks, std::uint64_t assignment) {
  return std::all_of(clause_masks.begin(), clause_masks.end(),
                     [&](std::uint64_t c) { return (c & assignment) != 0; });
}

}  // namespace

PositiveCnf make_cnf(unsigned variable_count, std::vector<std::vector<unsigned>> clauses) {
  PositiveCnf f;
  f.variable_count = variable_count;
  for (auto& clause : clauses) {
    if (clause.empty()) throw Error(ErrorCode::empty_clause, "clause has no literals");
    std::sort(clause.begin(), clause.end());
    clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
    if (clause.front() == 0 || clause.back() > variable_count) {
      throw Error(ErrorCode::header_mismatch, "variable outside 1.." + std::to_string(variable_count));
    }
  }
  f.clauses = std::move(clauses);
  f.assignment.assign(variable_count, false);
  return f;
}

PositiveCnf parse_cnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  long long k = 0;
  long long n = 0;
  std::vector<std::vector<unsigned>> clauses;
  std::vector<unsigned> current;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::string w;
    if (!(words >> w) || w[0] == 'c') continue;
    if (w == "p") {
      std::string kind, ks, ns, extra;
      if (header || !(words >> kind >> ks >> ns) || (words >> extra) || kind != "pcnf") {
        throw Error(ErrorCode::syntax, "expected 'p pcnf <k> <n>'", line_no);
      }
      auto kv = parse_int(ks);
      auto nv = parse_int(ns);
      if (!kv || !nv || *kv < 1 || *nv < 0 || *kv > 64) {
        throw Error(ErrorCode::syntax, "bad header counts", line_no);
      }
      k = *kv;
      n = *nv;
      header = true;
      continue;
    }
    if (!header) throw Error(ErrorCode::syntax, "clause before header", line_no);
    do {
      auto lit = parse_int(w);
      if (!lit) throw Error(ErrorCode::syntax, "bad literal '" + w + "'", line_no);
      if (*lit < 0) throw Error(ErrorCode::negative_literal, "literal " + w, line_no);
      if (*lit == 0) {
        if (current.empty()) throw Error(ErrorCode::empty_clause, "clause has no literals", line_no);
        clauses.push_back(std::move(current));
        current.clear();
      } else if (*lit > k) {
        throw Error(ErrorCode::header_mismatch, "variable " + w + " exceeds k=" + std::to_string(k), line_no);
      } else {
        current.push_back(static_cast<unsigned>(*lit));
      }
    } while (words >> w);
  }
  if (!header) throw Error(ErrorCode::syntax, "missing 'p pcnf' header", 1);
  if (!current.empty()) throw Error(ErrorCode::syntax, "last clause not terminated by 0", line_no);
  if (static_cast<long long>(clauses.size()) != n) {
    throw Error(ErrorCode::header_mismatch,
                "header declares " + std::to_string(n) + " clauses, found " + std::to_string(clauses.size()));
  }
  return make_cnf(static_cast<unsigned>(k), std::move(clauses));
}

std::string format_cnf(const PositiveCnf& f) {
  std::string out = "p pcnf " + std::to_string(f.variable_count) + " " + std::to_string(f.clauses.size()) + "\n";
  for (const auto& clause : f.clauses) {
    for (unsigned v : clause) out += std::to_string(v) + " ";
    out += "0\n";
  }
  return out;
}

bool evaluate(const PositiveCnf& f) {
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const std::vector<unsigned>& c) {
    return std::any_of(c.begin(), c.end(), [&](unsigned v) { return f.assignment[v - 1]; });
  });
}

std::vector<unsigned> avoid_true_moves(const PositiveCnf& f) {
  std::vector<unsigned> moves;
  PositiveCnf g = f;
  for (unsigned v = 1; v <= f.variable_count; ++v) {
    if (f.assignment[v - 1]) continue;
    g.assignment[v - 1] = true;
    if (!evaluate(g)) moves.push_back(v);
    g.assignment[v - 1] = false;
  }
  return moves;
}

Outcome avoid_true_outcome(const PositiveCnf& f) {
  std::vector<std::uint64_t> clause_masks;
  for (const auto& clause : f.clauses) {
    std::uint64_t m = 0;
    for (unsigned v : clause) m |= std::uint64_t{1} << (v - 1);
    clause_masks.push_back(m);
  }
  std::unordered_map<std::uint64_t, bool> memo;
  auto wins = [&](auto& self, std::uint64_t a) -> bool {
    if (auto it = memo.find(a); it != memo.end()) return it->second;
    bool win = false;
    for (unsigned v = 0; v < f.variable_count && !win; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (a & bit) continue;
      if (satisfied(clause_masks, a | bit)) continue;
      win = !self(self, a | bit);
    }
    memo.emplace(a, win);
    return win;
  };
  return wins(wins, mask_of(f)) ? Outcome::N : Outcome::P;
}

std::string describe(const Role& r) {
  const std::string i = std::to_string(r.index);
  switch (r.kind) {
    case RoleKind::x: return "x";
    case RoleKind::x_prime: return "x'";
    case RoleKind::variable: return "x" + i;
    case RoleKind::clause_copy: return "C" + i + "." + std::to_string(r.copy + 1);
    case RoleKind::gamma: return "C_gamma";
    case RoleKind::delta: return "C_delta";
    case RoleKind::epsilon: return "C_epsilon";
    case RoleKind::a: return "a" + i;
    case RoleKind::b: return "b" + i;
    case RoleKind::c: return "c" + i;
    case RoleKind::d: return "d" + i;
    case RoleKind::y: return "y";
  }
  return "?";
}

ReductionGadget build_reduction(const PositiveCnf& f) {
  if (f.variable_count == 0) throw Error(ErrorCode::invalid_spec, "formula needs a variable");
  ReductionGadget g;
  std::vector<ColorId> colors;
  std::vector<Edge> edges;
  auto add = [&](ColorId c, Role r) {
    colors.push_back(c);
    g.roles.push_back(r);
    return static_cast<Vertex>(colors.size() - 1);
  };

  const Vertex x = add(kBlack, {RoleKind::x});
  const Vertex xp = add(kBlack, {RoleKind::x_prime});
  for (unsigned v = 1; v <= f.variable_count; ++v) {
    const Vertex node = add(kWhite, {RoleKind::variable, v});
    g.variable_nodes.push_back(node);
    edges.push_back({x, node});
    edges.push_back({xp, node});
  }

  auto clause_node = [&](Role r, const std::vector<unsigned>& vars) {
    const Vertex c = add(kBlack, r);
    g.clause_nodes.push_back(c);
    for (unsigned v : vars) edges.push_back({c, g.variable_nodes[v - 1]});
  };
  for (unsigned j = 0; j < f.clauses.size(); ++j) {
    for (unsigned copy = 0; copy < 4; ++copy) clause_node({RoleKind::clause_copy, j + 1, copy}, f.clauses[j]);
  }
  std::vector<unsigned> all(f.variable_count);
  for (unsigned v = 0; v < f.variable_count; ++v) all[v] = v + 1;
  clause_node({RoleKind::gamma}, all);
  clause_node({RoleKind::delta}, all);
  clause_node({RoleKind::epsilon}, all);

  std::vector<Vertex> ends;
  for (unsigned j = 0; j < g.clause_nodes.size(); ++j) {
    Vertex prev = g.clause_nodes[j];
    constexpr RoleKind kinds[] = {RoleKind::a, RoleKind::b, RoleKind::c, RoleKind::d};
    for (unsigned s = 0; s < 4; ++s) {
      const Vertex next = add(s % 2 == 0 ? kWhite : kBlack, {kinds[s], j});
      edges.push_back({prev, next});
      prev = next;
    }
    ends.push_back(prev);
  }
  const Vertex y = add(kWhite, {RoleKind::y});
  for (Vertex d : ends) edges.push_back({d, y});

  auto palette = std::make_shared<const std::vector<std::string>>(std::vector<std::string>{"white", "black"});
  g.position = Position(ColoredGraph(std::move(colors), edges), palette);
  return g;
}

CorrespondenceReport correspondence_check(const PositiveCnf& f, const SolverOptions& options) {
  if (f.variable_count > kCorrespondenceMaxVariables || f.clauses.size() > kCorrespondenceMaxClauses) {
    throw Error(ErrorCode::guard_exceeded,
                "correspondence check limited to k <= " + std::to_string(kCorrespondenceMaxVariables) +
                    ", n <= " + std::to_string(kCorrespondenceMaxClauses));
  }
  const ReductionGadget g = build_reduction(f);
  Solver solver(options);
  CorrespondenceReport r;
  r.avoid_true = avoid_true_outcome(f);
  r.game = solver.outcome(g.position);

  const std::vector<unsigned> legal = avoid_true_moves(f);
  std::vector<unsigned> seen(f.variable_count, 0);
  for (const Move& m : legal_moves(g.position)) {
    const Role& role = g.roles[m.vertex];
    FirstMove fm{m, role, solver.outcome(apply_move_unchecked(g.position, m.vertex, m.new_color))};
    if (role.kind == RoleKind::variable) {
      ++seen[role.index - 1];
      fm.legal_in_avoid_true = std::find(legal.begin(), legal.end(), role.index) != legal.end();
      r.variable_moves.push_back(fm);
    } else {
      r.other_moves.push_back(fm);
    }
  }
  r.non_variable_moves_all_n = std::all_of(r.other_moves.begin(), r.other_moves.end(),
                                           [](const FirstMove& m) { return m.outcome == Outcome::N; });
  r.variable_moves_biject = std::all_of(seen.begin(), seen.end(), [](unsigned s) { return s == 1; });
  return r;
}

}  // namespace flagcolor
