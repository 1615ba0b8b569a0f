#include <doctest.h>

#include <algorithm>

#include "flagcolor/error.hpp"
#include "flagcolor/reduction.hpp"
#include "oracles.hpp"

namespace fc = flagcolor;

namespace {

fc::ErrorCode cnf_error(const std::string& text) {
  try {
    fc::parse_cnf(text);
  } catch (const fc::Error& e) {
    return e.code();
  }
  FAIL("expected a cnf error");
  return fc::ErrorCode::io;
}

}  // namespace

TEST_SUITE("reduction") {
  TEST_CASE("parse") {
    const fc::PositiveCnf f = fc::parse_cnf("c example\np pcnf 3 2\n1 2 0\n3\n2 0\n");
    CHECK(f.variable_count == 3);
    REQUIRE(f.clauses.size() == 2);
    CHECK(f.clauses[0] == std::vector<unsigned>{1, 2});
    CHECK(f.clauses[1] == std::vector<unsigned>{2, 3});
    CHECK(std::none_of(f.assignment.begin(), f.assignment.end(), [](bool b) { return b; }));
    CHECK(fc::parse_cnf(fc::format_cnf(f)).clauses == f.clauses);
  }

  TEST_CASE("parse errors") {
    CHECK(cnf_error("p pcnf 2 1\n1 -2 0\n") == fc::ErrorCode::negative_literal);
    CHECK(cnf_error("p pcnf 2 1\n0\n") == fc::ErrorCode::empty_clause);
    CHECK(cnf_error("p pcnf 2 1\n3 0\n") == fc::ErrorCode::header_mismatch);
    CHECK(cnf_error("p pcnf 2 2\n1 0\n") == fc::ErrorCode::header_mismatch);
    CHECK(cnf_error("1 0\n") == fc::ErrorCode::syntax);
    CHECK(cnf_error("p cnf 2 1\n1 0\n") == fc::ErrorCode::syntax);
    CHECK(cnf_error("p pcnf 2 1\n1 x 0\n") == fc::ErrorCode::syntax);
  }

  TEST_CASE("avoid true") {
    // (x1 or x2): one flip is fine, the second makes it true
    fc::PositiveCnf f = fc::make_cnf(2, {{1, 2}});
    CHECK_FALSE(fc::evaluate(f));
    CHECK(fc::avoid_true_moves(f) == std::vector<unsigned>{});
    f = fc::make_cnf(2, {{1}, {2}});
    CHECK(fc::avoid_true_moves(f) == std::vector<unsigned>{1, 2});
    CHECK(fc::avoid_true_outcome(f) == fc::Outcome::N);
    f.assignment = {true, true};
    CHECK(fc::evaluate(f));
    CHECK_THROWS_AS(fc::make_cnf(2, {{3}}), fc::Error);
    CHECK_THROWS_AS(fc::make_cnf(2, {{}}), fc::Error);
  }

  TEST_CASE("avoid true matches the game-tree oracle") {
    for (unsigned k = 1; k <= 4; ++k) {
      const unsigned subsets = (1u << k) - 1;
      for (unsigned a = 1; a <= subsets; ++a) {
        for (unsigned b = a; b <= subsets; ++b) {
          std::vector<std::vector<unsigned>> clauses(2);
          for (unsigned v = 0; v < k; ++v) {
            if (a >> v & 1) clauses[0].push_back(v + 1);
            if (b >> v & 1) clauses[1].push_back(v + 1);
          }
          const fc::PositiveCnf f = fc::make_cnf(k, clauses);
          const bool wins = oracle::avoid_true_first_player_wins(k, clauses, std::vector<bool>(k, false));
          CHECK((fc::avoid_true_outcome(f) == fc::Outcome::N) == wins);
        }
      }
    }
  }

  TEST_CASE("gadget shape") {
    for (unsigned k = 1; k <= 4; ++k) {
      for (unsigned n = 0; n <= 3; ++n) {
        std::vector<std::vector<unsigned>> clauses;
        for (unsigned j = 0; j < n; ++j) clauses.push_back({1 + j % k});
        const fc::ReductionGadget g = fc::build_reduction(fc::make_cnf(k, clauses));
        CHECK(g.clause_nodes.size() == 4 * n + 3);
        CHECK(g.variable_nodes.size() == k);
        CHECK(g.position.vertex_count() == k + 20 * n + 18);
        CHECK(g.position.graph().is_properly_colored());
        CHECK(g.position.color_count() == 2);
        CHECK(g.roles.size() == g.position.vertex_count());
      }
    }
    const fc::ReductionGadget g = fc::build_reduction(fc::make_cnf(1, {{1}}));
    CHECK(fc::describe(g.roles[0]) == "x");
    CHECK(fc::describe(g.roles[g.variable_nodes[0]]) == "x1");
    CHECK_THROWS_AS(fc::build_reduction(fc::make_cnf(0, {})), fc::Error);
  }

  TEST_CASE("correspondence on small formulas") {
    const fc::CorrespondenceReport r = fc::correspondence_check(fc::make_cnf(2, {{1}, {2}}));
    CHECK(r.non_variable_moves_all_n);
    CHECK(r.variable_moves_biject);
    CHECK(r.avoid_true == r.game);
    CHECK(r.variable_moves.size() == 2);
    CHECK_THROWS_AS(fc::correspondence_check(fc::make_cnf(5, {{1}})), fc::Error);
  }
}
