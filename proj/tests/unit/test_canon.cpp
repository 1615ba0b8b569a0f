#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "flagcolor/canon.hpp"
#include "flagcolor/families.hpp"
#include "oracles.hpp"

namespace fc = flagcolor;

TEST_SUITE("canon") {
  TEST_CASE("keys agree with the permutation oracle") {
    // key equality must coincide with brute-force isomorphism
    std::mt19937 rng(3);
    std::map<std::string, fc::CanonicalKey> by_brute;
    std::map<fc::CanonicalKey, std::string> by_key;
    for (int s = 0; s < 400; ++s) {
      const int n = std::uniform_int_distribution<int>(1, 7)(rng);
      const oracle::Small small = oracle::random_position(rng, n, 2 + s % 2);
      const std::string brute = oracle::brute_key(small);
      const fc::CanonicalKey key = fc::canonical_key(oracle::to_graph(small));
      auto [a, fresh_a] = by_brute.emplace(brute, key);
      auto [b, fresh_b] = by_key.emplace(key, brute);
      CHECK(a->second == key);
      CHECK(b->second == brute);
    }
    CHECK(by_brute.size() > 50);
  }

  TEST_CASE("labeling reproduces the key") {
    std::mt19937 rng(5);
    for (int s = 0; s < 50; ++s) {
      const oracle::Small small = oracle::random_position(rng, 8, 3);
      const fc::ColoredGraph g = oracle::to_graph(small);
      const fc::CanonicalForm form = fc::canonical_form(g);
      CHECK(fc::certificate(g, form.labeling) == form.key.bytes());
      CHECK(fc::canonical_key(fc::relabel(g, form.labeling)) == form.key);
    }
  }

  TEST_CASE("orbits are automorphism classes") {
    // every vertex pair declared in one orbit must be exchangeable
    std::mt19937 rng(9);
    for (int s = 0; s < 60; ++s) {
      const oracle::Small small = oracle::random_position(rng, 7, 2);
      const fc::ColoredGraph g = oracle::to_graph(small);
      const fc::CanonicalForm form = fc::canonical_form(g);
      for (fc::Vertex v = 0; v < g.vertex_count(); ++v) {
        const fc::Vertex w = form.orbit[v];
        if (w == v) continue;
        oracle::Small mv = small, mw = small;
        mv.color[v] = 9;
        mw.color[w] = 9;
        CHECK(oracle::brute_key(mv) == oracle::brute_key(mw));
      }
    }
  }

  TEST_CASE("symmetric graphs") {
    fc::Position star = fc::build(fc::Star{12});
    fc::CanonicalForm form = fc::canonical_form(star.graph());
    for (fc::Vertex v = 1; v < 13; ++v) CHECK(form.orbit[v] == form.orbit[1]);
    // K_{5,5}: two orbits of five
    fc::CanonicalForm k = fc::canonical_form(fc::build(fc::CompleteBipartite{5, 5}).graph());
    std::vector<fc::Vertex> orbits = k.orbit;
    std::sort(orbits.begin(), orbits.end());
    orbits.erase(std::unique(orbits.begin(), orbits.end()), orbits.end());
    CHECK(orbits.size() == 2);
  }

  TEST_CASE("colors are not interchangeable") {
    const fc::Edge e[] = {{0, 1}, {1, 2}};
    CHECK(fc::canonical_key(fc::ColoredGraph({0, 1, 0}, e)) != fc::canonical_key(fc::ColoredGraph({1, 0, 1}, e)));
  }

  TEST_CASE("hex is printable") {
    const fc::CanonicalKey k = fc::canonical_key(fc::build(fc::Path{3}));
    CHECK(k.hex().size() == 2 * k.bytes().size());
    CHECK(k.hex().find_first_not_of("0123456789abcdef") == std::string::npos);
  }
}
