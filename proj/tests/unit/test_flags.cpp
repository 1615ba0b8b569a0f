#include <doctest.h>

#include <algorithm>

#include "flagcolor/canon.hpp"
#include "flagcolor/families.hpp"
#include "flagcolor/flags.hpp"
#include "flagcolor/io.hpp"
#include "flagcolor/solver.hpp"
#include "oracles.hpp"

namespace fc = flagcolor;

namespace {

fc::Vertex only_vertex_named(const fc::Position& p, std::string_view color) {
  fc::Vertex found = 0;
  int count = 0;
  for (fc::Vertex v = 0; v < p.vertex_count(); ++v) {
    if (p.color_name(p.color(v)) == color) {
      found = v;
      ++count;
    }
  }
  REQUIRE(count == 1);
  return found;
}

}  // namespace

TEST_SUITE("flags") {
  TEST_CASE("ids") {
    CHECK(fc::all_flags().size() == 5);
    for (fc::FlagId id : fc::all_flags()) CHECK(fc::parse_flag_id(fc::to_string(id)) == id);
    CHECK_FALSE(fc::parse_flag_id("narnia"));
  }

  TEST_CASE("encodings") {
    const fc::Position us = fc::flag_position(fc::FlagId::us);
    CHECK(us.vertex_count() == 64);
    CHECK(us.color_count() == 3);
    const fc::Vertex b = only_vertex_named(us, "blue");
    CHECK(us.graph().degree(b) == 58);

    const fc::Position az = fc::flag_position(fc::FlagId::azores);
    CHECK(az.vertex_count() == 51);
    CHECK(az.color_count() == 4);
    CHECK(az.graph().degree(only_vertex_named(az, "red")) == 9);

    CHECK(fc::flag_position(fc::FlagId::france).vertex_count() == 3);
    CHECK(fc::flag_position(fc::FlagId::maine).color_count() == 3);
  }

  TEST_CASE("canada is a three-pendant star") {
    const fc::Position canada = fc::flag_position(fc::FlagId::canada);
    CHECK(fc::canonical_key(canada) == fc::canonical_key(fc::build(fc::Star{3})));
    CHECK(fc::grundy(canada) == fc::star_value(3));
    const fc::FlagReport r = fc::flag_report(fc::FlagId::canada);
    CHECK(r.outcome == fc::Outcome::N);
    REQUIRE(r.winning_moves.size() == 1);
    CHECK(fc::format_move(canada, r.winning_moves[0]) == "0 white->red");
  }

  TEST_CASE("small flags") {
    fc::FlagReportOptions o;
    o.compute_grundy = true;
    for (auto [id, value] : {std::pair{fc::FlagId::canada, 1u}, {fc::FlagId::france, 0u}, {fc::FlagId::maine, 0u}}) {
      const fc::FlagReport r = fc::flag_report(id, o);
      CHECK(r.grundy == fc::Nimber{value});
      CHECK(r.grundy->value == oracle::grundy(oracle::from_graph(fc::flag_position(id).graph())));
    }
    CHECK(fc::flag_report(fc::FlagId::maine).winning_moves.empty());
  }

  TEST_CASE("three colors change the path value") {
    const fc::Position france = fc::flag_position(fc::FlagId::france);
    CHECK(france.vertex_count() == 3);
    CHECK(fc::grundy(france) == fc::Nimber{0});
    CHECK(fc::grundy(fc::build(fc::Path{2})) == fc::Nimber{2});
  }

  TEST_CASE("us pendant moves cancel in pairs") {
    const fc::Position us = fc::flag_position(fc::FlagId::us);
    const fc::Vertex b = only_vertex_named(us, "blue");
    fc::Vertex pendant = 0;
    for (fc::Vertex v = 0; v < us.vertex_count(); ++v) {
      if (us.graph().degree(v) == 1 && us.graph().neighbors(v)[0] == b) pendant = v;
    }
    const fc::Position once = fc::apply_move(us, {pendant, us.color(b)});
    fc::Vertex second = 0;
    const fc::Vertex b1 = only_vertex_named(once, "blue");
    for (fc::Vertex v = 0; v < once.vertex_count(); ++v) {
      if (once.graph().degree(v) == 1 && once.graph().neighbors(v)[0] == b1) second = v;
    }
    const fc::Position twice = fc::apply_move(once, {second, once.color(b1)});
    CHECK(twice.vertex_count() == 62);
    fc::Solver solver;
    CHECK(solver.outcome(twice) == solver.outcome(us));
    CHECK(solver.outcome(us) == fc::Outcome::P);
  }
}
