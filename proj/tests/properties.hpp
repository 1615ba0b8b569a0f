#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace props {

struct Result {
  bool ok = true;
  std::size_t checked = 0;
  std::string failure;  // first counterexample

  void fail(std::string what) {
    if (ok) failure = std::move(what);
    ok = false;
  }
};

/// Grundy value and canonical key are unchanged by random vertex
/// relabelings of random positions with 2..max_vertices vertices, and agree
/// with the brute-force game tree.
Result relabel_invariance(std::uint32_t seed, std::size_t samples, std::size_t max_vertices = 8);

/// Memoized and plain search agree on every enumerated position.
Result memo_equivalence(std::size_t max_vertices, std::size_t colors);

/// contract() of random colored graphs matches the matrix quotient, and
/// contracting again changes nothing.
Result contraction_idempotence(std::uint32_t seed, std::size_t samples);

Result mex_identities();

}  // namespace props
