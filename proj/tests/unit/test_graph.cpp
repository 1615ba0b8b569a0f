#include <doctest.h>

#include <algorithm>
#include <vector>

#include "flagcolor/error.hpp"
#include "flagcolor/graph.hpp"
#include "oracles.hpp"

namespace fc = flagcolor;

namespace {

fc::Position path(std::vector<fc::ColorId> colors) {
  std::vector<fc::Edge> edges;
  for (fc::Vertex v = 1; v < colors.size(); ++v) edges.push_back({v - 1, v});
  return fc::Position(fc::ColoredGraph(std::move(colors), edges));
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("constructor rejects bad edges") {
    const fc::Edge loop[] = {{0, 0}};
    CHECK_THROWS_AS(fc::ColoredGraph({0, 1}, loop), fc::Error);
    const fc::Edge far[] = {{0, 5}};
    try {
      fc::ColoredGraph({0, 1}, far);
      FAIL("expected unknown_vertex");
    } catch (const fc::Error& e) {
      CHECK(e.code() == fc::ErrorCode::unknown_vertex);
    }
  }

  TEST_CASE("parallel edges merge") {
    const fc::Edge edges[] = {{0, 1}, {1, 0}, {0, 1}};
    fc::ColoredGraph g({0, 1}, edges);
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(0, 1));
    CHECK(g.degree(0) == 1);
  }

  TEST_CASE("position validation") {
    const fc::Edge mono[] = {{0, 1}};
    CHECK_THROWS_AS(fc::Position(fc::ColoredGraph({0, 0}, mono)), fc::Error);
    try {
      fc::Position(fc::ColoredGraph({0, 1}, {}));
      FAIL("expected disconnected");
    } catch (const fc::Error& e) {
      CHECK(e.code() == fc::ErrorCode::disconnected);
    }
  }

  TEST_CASE("color ids are compacted in order") {
    const fc::Edge edges[] = {{0, 1}, {1, 2}};
    fc::Position p(fc::ColoredGraph({5, 2, 9}, edges));
    CHECK(p.color(0) == 1);
    CHECK(p.color(1) == 0);
    CHECK(p.color(2) == 2);
    CHECK(p.color_count() == 3);
  }

  TEST_CASE("terminal position") {
    fc::Position p;
    CHECK(p.is_terminal());
    CHECK(fc::legal_moves(p).empty());
  }

  TEST_CASE("contract merges monochromatic components") {
    // 0-1-2-3 colored a a b a, plus 3-0
    const fc::Edge edges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    fc::Position p = fc::contract(fc::ColoredGraph({0, 0, 1, 0}, edges));
    CHECK(p.vertex_count() == 2);
    CHECK(p.graph().edge_count() == 1);
    CHECK_THROWS_AS(fc::contract(fc::ColoredGraph({0, 1}, {})), fc::Error);
  }

  TEST_CASE("moves on a path") {
    fc::Position p = path({0, 1, 0, 1});
    const auto moves = fc::legal_moves(p);
    CHECK(moves.size() == 4);  // one neighbor color per vertex
    // recoloring an end merges it into its neighbor
    fc::Position q = fc::apply_move(p, {0, 1});
    CHECK(q.vertex_count() == 3);
    // recoloring an inner vertex merges three vertices
    fc::Position r = fc::apply_move(p, {1, 0});
    CHECK(r.vertex_count() == 2);
    CHECK_THROWS_AS(fc::apply_move(p, {0, 0}), fc::Error);
    CHECK_THROWS_AS(fc::apply_move(p, {9, 0}), fc::Error);
  }

  TEST_CASE("legal moves are the neighbor colors") {
    fc::Position p = path({0, 1, 2, 0});
    std::vector<fc::Move> expected = {{0, 1}, {1, 0}, {1, 2}, {2, 0}, {2, 1}, {3, 2}};
    CHECK(fc::legal_moves(p) == expected);
  }

  TEST_CASE("apply_move matches the matrix oracle") {
    std::mt19937 rng(11);
    for (int s = 0; s < 100; ++s) {
      const int n = std::uniform_int_distribution<int>(2, 9)(rng);
      const oracle::Small small = oracle::random_position(rng, n, 3);
      const fc::Position p(oracle::to_graph(small));
      for (const fc::Move& m : fc::legal_moves(p)) {
        const fc::Position q = fc::apply_move(p, m);
        const oracle::Small expected = oracle::play(oracle::from_graph(p.graph()), m.vertex, m.new_color);
        CHECK(oracle::brute_key_normalized(oracle::from_graph(q.graph())) == oracle::brute_key_normalized(expected));
      }
    }
  }

  TEST_CASE("permute and recolor") {
    fc::Position p = path({0, 1, 2});
    const fc::Vertex perm[] = {2, 0, 1};
    fc::Position q = fc::permute(p, perm);
    CHECK(q.vertex_count() == 3);
    CHECK(q.graph().adjacent(2, 0));
    CHECK(q.graph().adjacent(0, 1));
    CHECK_FALSE(q.graph().adjacent(2, 1));
    const fc::ColorId swap[] = {2, 1, 0};
    fc::Position r = fc::recolor(p, swap);
    CHECK(r.color(0) == 2);
    CHECK(r.color(2) == 0);
  }
}
