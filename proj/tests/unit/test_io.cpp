#include <doctest.h>

#include <string>

#include "flagcolor/canon.hpp"
#include "flagcolor/error.hpp"
#include "flagcolor/families.hpp"
#include "flagcolor/io.hpp"

namespace fc = flagcolor;

namespace {

fc::Error parse_error(const std::string& text) {
  try {
    fc::parse_graph(text);
  } catch (const fc::Error& e) {
    return e;
  }
  FAIL("expected a parse error");
  return fc::Error(fc::ErrorCode::io, "");
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("registered colors") {
    CHECK(fc::registered_color("white") == fc::ColorId{0});
    CHECK(fc::registered_color("black") == fc::ColorId{1});
    CHECK(fc::registered_color("buff") == fc::ColorId{6});
    CHECK_FALSE(fc::registered_color("mauve"));
    CHECK(fc::registered_name(3) == std::string_view("blue"));
  }

  TEST_CASE("graph format") {
    const fc::Position p = fc::parse_graph(
        "# comment\n"
        "flagcolor-graph 1\n"
        "v 0 blue   # trailing\n"
        "v 1 white\n"
        "v 2 red\n"
        "e 0 1\n"
        "e 1 2\n");
    CHECK(p.vertex_count() == 3);
    CHECK(p.color_count() == 3);
    CHECK(p.color_name(p.color(0)) == "blue");
  }

  TEST_CASE("same-colored edges contract on load") {
    const fc::Position p = fc::parse_graph("flagcolor-graph 1\nv 0 red\nv 1 red\nv 2 white\ne 0 1\ne 1 2\n");
    CHECK(p.vertex_count() == 2);
  }

  TEST_CASE("errors carry lines") {
    fc::Error e = parse_error("flagcolor-graph 1\nv 0 red\nv 0 white\n");
    CHECK(e.code() == fc::ErrorCode::duplicate_vertex);
    CHECK(e.line() == 3);

    e = parse_error("flagcolor-graph 1\nv 0 red\nv 1 white\ne 0 7\n");
    CHECK(e.code() == fc::ErrorCode::unknown_vertex);
    CHECK(e.line() == 4);

    e = parse_error("flagcolor-graph 1\nv 0 red\ne 0 0\n");
    CHECK(e.code() == fc::ErrorCode::self_loop);
    CHECK(e.line() == 3);

    e = parse_error("flagcolor-graph 1\nv 0 mauve\n");
    CHECK(e.code() == fc::ErrorCode::syntax);
    CHECK(e.line() == 2);

    e = parse_error("v 0 red\n");
    CHECK(e.code() == fc::ErrorCode::syntax);

    e = parse_error("flagcolor-graph 1\nv 0 red\nv 1 white\n");
    CHECK(e.code() == fc::ErrorCode::disconnected);
  }

  TEST_CASE("grid regions") {
    // three vertical bands
    const fc::Position p = fc::parse_grid("BWR\nBWR\nBWR\n");
    CHECK(p.vertex_count() == 3);
    CHECK(p.graph().edge_count() == 2);
    // a border ring around a center
    const fc::Position ring = fc::parse_grid("RRR\nRWR\nRRR\n");
    CHECK(ring.vertex_count() == 2);
    // diagonal contact does not join regions
    CHECK(fc::parse_grid("AB\nBA\n").vertex_count() == 4);
    CHECK_THROWS_AS(fc::parse_grid("AB\nA\n"), fc::Error);
    CHECK_THROWS_AS(fc::parse_grid(""), fc::Error);
  }

  TEST_CASE("round trips") {
    for (const fc::FamilySpec& spec : {fc::FamilySpec{fc::Broom{3, 4}}, fc::FamilySpec{fc::Diamond{2, 3}},
                                       fc::FamilySpec{fc::Route{{0, 2, 4}}}}) {
      const fc::Position p = fc::build(spec);
      const fc::Position g = fc::parse_graph(fc::format_graph(p));
      const fc::Position j = fc::parse_json(fc::format_json(p));
      CHECK(fc::canonical_key(g) == fc::canonical_key(p));
      CHECK(fc::canonical_key(j) == fc::canonical_key(p));
    }
    const fc::Position named = fc::parse_graph("flagcolor-graph 1\nv 0 blue\nv 1 yellow\ne 0 1\n");
    const fc::Position back = fc::parse_json(fc::format_json(named));
    CHECK(back.color_name(back.color(0)) == "blue");
    CHECK(back.color_name(back.color(1)) == "yellow");
  }

  TEST_CASE("json errors") {
    CHECK_THROWS_AS(fc::parse_json("{"), fc::Error);
    CHECK_THROWS_AS(fc::parse_json(R"({"format":"other","version":1})"), fc::Error);
  }

  TEST_CASE("move and dot text") {
    const fc::Position p = fc::parse_graph("flagcolor-graph 1\nv 0 red\nv 1 blue\ne 0 1\n");
    CHECK(fc::format_move(p, {0, p.color(1)}) == "0 red->blue");
    const std::string dot = fc::format_dot(p);
    CHECK(dot.rfind("graph flagcolor {", 0) == 0);
    CHECK(dot.find("0 -- 1") != std::string::npos);
  }

  TEST_CASE("format dispatch") {
    CHECK(fc::format_from_path("a/b.grid") == fc::InputFormat::grid);
    CHECK(fc::format_from_path("x.graph") == fc::InputFormat::graph);
    CHECK(fc::format_from_path("x.json") == fc::InputFormat::json);
    CHECK_FALSE(fc::format_from_path("x.txt"));
    CHECK_THROWS_AS(fc::read_file("/nonexistent/file.graph"), fc::Error);
  }
}
