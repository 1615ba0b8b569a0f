#include <doctest.h>

#include <cstdlib>
#include <random>
#include <vector>

#include "flagcolor/error.hpp"
#include "flagcolor/families.hpp"
#include "flagcolor/solver.hpp"
#include "oracles.hpp"

namespace fc = flagcolor;

TEST_SUITE("solver") {
  TEST_CASE("nimber text") {
    CHECK(fc::to_string(fc::Nimber{0}) == "0");
    CHECK(fc::to_string(fc::Nimber{1}) == "*");
    CHECK(fc::to_string(fc::Nimber{5}) == "*5");
    CHECK(std::string(fc::to_string(fc::Outcome::P)) == "P");
    CHECK((fc::Nimber{3} ^ fc::Nimber{5}) == fc::Nimber{6});
  }

  TEST_CASE("small positions") {
    CHECK(fc::grundy(fc::Position{}) == fc::Nimber{0});
    CHECK(fc::grundy(fc::build(fc::Path{1})) == fc::Nimber{1});
    CHECK(fc::grundy(fc::build(fc::Path{2})) == fc::Nimber{2});
    CHECK(fc::outcome(fc::build(fc::Path{3})) == fc::Outcome::P);
  }

  TEST_CASE("agrees with the game-tree oracle") {
    std::mt19937 rng(17);
    fc::Solver solver;
    for (int s = 0; s < 150; ++s) {
      const int n = std::uniform_int_distribution<int>(1, 8)(rng);
      const oracle::Small small = oracle::random_position(rng, n, 2 + s % 3);
      const fc::Position p(oracle::to_graph(small));
      const std::uint32_t expected = oracle::grundy(small);
      CHECK(solver.grundy(p).value == expected);
      CHECK((solver.outcome(p) == fc::Outcome::P) == (expected == 0));
    }
  }

  TEST_CASE("option values and winning moves") {
    fc::Solver solver;
    const fc::Position p = fc::build(fc::Star{3});
    const auto options = solver.option_values(p);
    CHECK(options.size() == fc::legal_moves(p).size());
    std::vector<std::uint32_t> values;
    for (const auto& o : options) {
      values.push_back(o.value.value);
      CHECK(fc::grundy(fc::apply_move(p, o.move)) == o.value);
    }
    CHECK(fc::mex(values) == solver.grundy(p).value);
    for (const fc::Move& m : solver.winning_moves(p)) CHECK(fc::grundy(fc::apply_move(p, m)) == fc::Nimber{0});
    CHECK(solver.winning_moves(fc::build(fc::Path{3})).empty());
  }

  TEST_CASE("sums xor") {
    const std::vector<fc::Position> parts = {fc::build(fc::Path{1}), fc::build(fc::Path{2}), fc::build(fc::Star{5})};
    CHECK(fc::grundy_sum(parts) == fc::Nimber{1 ^ 2 ^ 1});
    CHECK(fc::grundy_sum(std::span<const fc::Position>{}) == fc::Nimber{0});
  }

  TEST_CASE("plain search matches memo search") {
    fc::SolverOptions off;
    off.use_table = false;
    fc::Solver plain(off);
    fc::Solver memo;
    for (unsigned x = 0; x <= 9; ++x) CHECK(plain.grundy(fc::build(fc::Path{x})) == memo.grundy(fc::build(fc::Path{x})));
    CHECK(plain.stats().canonizations == 0);
  }

  TEST_CASE("table cap raises capacity_exhausted") {
    fc::SolverOptions o;
    o.memo_cap = 4;
    fc::Solver solver(o);
    try {
      solver.grundy(fc::build(fc::Diamond{3, 3}));
      FAIL("expected capacity_exhausted");
    } catch (const fc::Error& e) {
      CHECK(e.code() == fc::ErrorCode::capacity_exhausted);
    }
  }

  TEST_CASE("transposition table") {
    fc::TranspositionTable t(2);
    const fc::CanonicalKey a("a"), b("b"), c("c");
    t.insert(a, 1);
    t.insert(a, 1);
    t.insert(b, 0);
    CHECK(t.size() == 2);
    CHECK(t.find(a) == 1u);
    CHECK_FALSE(t.find(c));
    CHECK_THROWS_AS(t.insert(c, 3), fc::Error);
    t.clear();
    CHECK(t.size() == 0);
  }

  TEST_CASE("shared table persists across calls") {
    auto table = std::make_shared<fc::TranspositionTable>();
    fc::Solver first({}, table);
    first.grundy(fc::build(fc::Broom{3, 3}));
    const auto filled = table->size();
    CHECK(filled > 0);
    fc::Solver second({}, table);
    second.grundy(fc::build(fc::Broom{3, 3}));
    CHECK(table->size() == filled);
    CHECK(second.stats().nodes == 0);
  }

  TEST_CASE("thread count does not change values") {
    fc::SolverOptions four;
    four.threads = 4;
    fc::Solver wide(four);
    fc::Solver narrow;
    for (unsigned p = 0; p < 5; ++p) {
      for (unsigned d = 0; d < 4; ++d) {
        const fc::Position pos = fc::build(fc::Diamond{p, d});
        CHECK(wide.grundy(pos) == narrow.grundy(pos));
        CHECK(wide.winning_moves(pos) == narrow.winning_moves(pos));
      }
    }
  }
}
