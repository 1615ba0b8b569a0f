#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "flagcolor/graph.hpp"
#include "flagcolor/solver.hpp"

namespace flagcolor {

/// Conjunction of clauses over variables 1..variable_count, no negations.
struct PositiveCnf {
  unsigned variable_count = 0;
  /// Each clause sorted, duplicates removed, non-empty.
  std::vector<std::vector<unsigned>> clauses;
  /// assignment[v - 1] for variable v; all false after parsing.
  std::vector<bool> assignment;
};

/// Positive DIMACS: `c` comments, header `p pcnf <k> <n>`, clauses of
/// positive integers each terminated by 0. Throws Error with codes
/// negative_literal, empty_clause, header_mismatch or syntax.
PositiveCnf parse_cnf(std::string_view text);
std::string format_cnf(const PositiveCnf& f);

/// Formula with every variable false. Throws Error(header_mismatch) for an
/// out-of-range variable and Error(empty_clause) for an empty clause.
PositiveCnf make_cnf(unsigned variable_count, std::vector<std::vector<unsigned>> clauses);

bool evaluate(const PositiveCnf& f);

/// False variables (1-based) whose flip keeps the formula false.
std::vector<unsigned> avoid_true_moves(const PositiveCnf& f);
/// Normal-play outcome by backward induction over assignments.
Outcome avoid_true_outcome(const PositiveCnf& f);

enum class RoleKind { x, x_prime, variable, clause_copy, gamma, delta, epsilon, a, b, c, d, y };

/// `index` is the variable (1-based) for variable nodes, the clause
/// (1-based) for clause copies, and the clause node (0-based, in vertex
/// order) for path vertices a..d. `copy` numbers clause copies 0..3.
struct Role {
  RoleKind kind = RoleKind::x;
  unsigned index = 0;
  unsigned copy = 0;
};

std::string describe(const Role& role);

struct ReductionGadget {
  Position position;
  std::vector<Role> roles;  // by vertex
  std::vector<Vertex> clause_nodes;
  std::vector<Vertex> variable_nodes;  // variable_nodes[v - 1]
};

/// White: variables, a, c, y. Black: x, x', clause nodes, b, d.
ReductionGadget build_reduction(const PositiveCnf& f);

struct FirstMove {
  Move move;
  Role role;
  Outcome outcome;
  /// Variable moves only: whether flipping that variable is legal in A.
  bool legal_in_avoid_true = false;
};

struct CorrespondenceReport {
  Outcome avoid_true;
  Outcome game;
  std::vector<FirstMove> variable_moves;
  std::vector<FirstMove> other_moves;
  bool non_variable_moves_all_n = false;
  /// Exactly one first move per variable node and none elsewhere among
  /// variable roles.
  bool variable_moves_biject = false;
};

inline constexpr unsigned kCorrespondenceMaxVariables = 4;
inline constexpr unsigned kCorrespondenceMaxClauses = 3;

/// Throws Error(guard_exceeded) beyond the limits above.
CorrespondenceReport correspondence_check(const PositiveCnf& f, const SolverOptions& options = {});

}  // namespace flagcolor
