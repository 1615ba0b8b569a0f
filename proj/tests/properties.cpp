#include "properties.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "flagcolor/canon.hpp"
#include "flagcolor/io.hpp"
#include "flagcolor/search.hpp"
#include "flagcolor/solver.hpp"
#include "oracles.hpp"

namespace fc = flagcolor;

namespace props {

Result relabel_invariance(std::uint32_t seed, std::size_t samples, std::size_t max_vertices) {
  Result r;
  std::mt19937 rng(seed);
  fc::Solver solver;
  for (std::size_t s = 0; s < samples; ++s) {
    const int n = std::uniform_int_distribution<int>(2, static_cast<int>(max_vertices))(rng);
    const int colors = std::uniform_int_distribution<int>(2, 4)(rng);
    const oracle::Small small = oracle::random_position(rng, n, colors);
    const fc::Position p = fc::contract(oracle::to_graph(small));

    std::vector<fc::Vertex> perm(p.vertex_count());
    std::iota(perm.begin(), perm.end(), fc::Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const fc::Position q = fc::permute(p, perm);

    const fc::Nimber a = solver.grundy(p);
    const fc::Nimber b = fc::grundy(q);
    const std::uint32_t expected = oracle::grundy(oracle::from_graph(p.graph()));
    ++r.checked;
    if (a != b || a.value != expected || fc::canonical_key(p) != fc::canonical_key(q)) {
      r.fail("sample " + std::to_string(s) + ": " + fc::to_string(a) + " vs relabeled " + fc::to_string(b) +
             ", oracle *" + std::to_string(expected) + "\n" + fc::format_graph(p));
    }
  }
  return r;
}

Result memo_equivalence(std::size_t max_vertices, std::size_t colors) {
  Result r;
  fc::SearchConfig cfg;
  cfg.max_vertices = max_vertices;
  cfg.color_count = colors;
  fc::Solver memo;
  fc::SolverOptions off;
  off.use_table = false;
  fc::Solver plain(off);
  for (const fc::Position& p : fc::enumerate_positions(cfg)) {
    ++r.checked;
    const fc::Nimber a = memo.grundy(p);
    const fc::Nimber b = plain.grundy(p);
    if (a != b) r.fail(fc::to_string(a) + " vs " + fc::to_string(b) + "\n" + fc::format_graph(p));
  }
  return r;
}

Result contraction_idempotence(std::uint32_t seed, std::size_t samples) {
  Result r;
  std::mt19937 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    const int colors = std::uniform_int_distribution<int>(1, 5)(rng);
    const oracle::Small small = oracle::random_colored(rng, n, colors);
    const fc::Position once = fc::contract(oracle::to_graph(small));
    const fc::Position twice = fc::contract(once.graph());

    // oracle quotient with colors compacted in order
    oracle::Small expected = oracle::contract(small);
    std::vector<int> used = expected.color;
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    for (int& c : expected.color) c = static_cast<int>(std::lower_bound(used.begin(), used.end(), c) - used.begin());

    ++r.checked;
    const oracle::Small got = oracle::from_graph(once.graph());
    if (!(twice.graph() == once.graph()) || got.color != expected.color || got.adj != expected.adj ||
        !once.graph().is_properly_colored()) {
      r.fail("sample " + std::to_string(s) + "\n" + fc::format_graph(once));
    }
  }
  return r;
}

Result mex_identities() {
  Result r;
  auto check = [&](std::vector<std::uint32_t> values, std::uint32_t expected) {
    ++r.checked;
    const std::uint32_t got = fc::mex(values);
    if (got != expected) {
      std::string s = "mex{";
      for (auto v : values) s += std::to_string(v) + ",";
      r.fail(s + "} = " + std::to_string(got) + ", expected " + std::to_string(expected));
    }
  };
  check({}, 0);
  check({0}, 1);
  check({1}, 0);
  check({0, 0, 0}, 1);
  check({2, 0}, 1);
  check({3, 1, 0, 2}, 4);
  check({1, 2, 3}, 0);
  check({0, 1, 1, 3, 5}, 2);
  check({7, 1000000}, 0);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = std::uniform_int_distribution<std::uint32_t>(0, 40)(rng);
    std::vector<std::uint32_t> values(n);
    std::iota(values.begin(), values.end(), 0u);
    std::shuffle(values.begin(), values.end(), rng);
    check(values, n);
    if (n > 0) {
      // removing one value makes it the mex
      const auto gap = std::uniform_int_distribution<std::uint32_t>(0, n - 1)(rng);
      std::vector<std::uint32_t> holed;
      for (auto v : values) {
        if (v != gap) holed.push_back(v);
      }
      holed.push_back(n + 5);
      check(holed, gap);
    }
  }
  return r;
}

}  // namespace props
