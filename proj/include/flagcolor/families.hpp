#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "flagcolor/canon.hpp"
#include "flagcolor/graph.hpp"
#include "flagcolor/solver.hpp"

namespace flagcolor {

/// Center with i pendants.
struct Star {
  unsigned i = 0;
};
/// Center with p pendants and d diamonds (two common neighbors of the center
/// and one far vertex).
struct Diamond {
  unsigned p = 0;
  unsigned d = 0;
};
/// Path with x edges.
struct Path {
  unsigned x = 0;
};
/// Path of length l from u to v, with i pendants on v.
struct Broom {
  unsigned i = 0;
  unsigned l = 0;
};
struct CompleteBipartite {
  unsigned m = 1;
  unsigned n = 1;
};
/// Terminals u, v joined by internally disjoint paths of the given lengths.
/// Length 0 merges u and v; length 1 is the edge uv.
struct Route {
  std::vector<unsigned> lengths;
};

using FamilySpec = std::variant<Star, Diamond, Path, Broom, CompleteBipartite, Route>;

/// "star(3)", "diamond(3,2)", "route(0,2,6)", ...
std::string describe(const FamilySpec& spec);

/// Contracted, properly 2-colored position. The star, diamond and broom
/// center, the first path vertex and route terminal u get color 0.
/// Throws Error(invalid_spec) for mixed-parity routes, routes without a
/// positive length, and K_{m,n} with an empty side.
Position build(const FamilySpec& spec);

std::size_t vertex_count(const FamilySpec& spec);

// --- closed forms --------------------------------------------------------

Nimber star_value(unsigned i);
Nimber diamond_value(unsigned p, unsigned d);
Nimber path_value(unsigned x);
Nimber broom_value(unsigned i, unsigned l);
Outcome bipartite_outcome(unsigned m, unsigned n);

enum class Parity { even, odd };
enum class Endpoints { merged, adjacent, distinct };

/// Route shape by path-length counts: (i, j, k) paths of length (2, 4, 6)
/// for even routes, (i, j) of length (3, 5) for odd ones.
struct RouteCategory {
  Parity parity = Parity::even;
  Endpoints endpoints = Endpoints::merged;
  unsigned i = 0;
  unsigned j = 0;
  unsigned k = 0;

  friend auto operator<=>(const RouteCategory&, const RouteCategory&) = default;
};

/// "even-merged", "odd-adjacent", "even-distinct" or "odd-distinct".
std::string_view category_name(Parity parity, Endpoints endpoints);
std::string describe(const RouteCategory& cat);

/// Throws Error(invalid_spec) for mixed parity, no positive length, or a
/// length outside {0,...,6} ({0,2,4,6} or {1,3,5}).
RouteCategory route_category(std::span<const unsigned> lengths);
/// Inverse of route_category: the sorted length multiset.
Route route_of(const RouteCategory& cat);

/// Printed table entry. Merged even routes without 6-paths are T_{i,j}.
/// Throws Error(invalid_spec) for disconnected categories.
Nimber route_value(const RouteCategory& cat);
bool route_is_p_position(const RouteCategory& cat);

struct RouteErratum {
  RouteCategory category;
  Nimber printed;
  Nimber computed;
};

/// Tab-separated: category i j k printed computed; '#' starts a comment.
std::vector<RouteErratum> parse_route_errata(std::string_view text);
/// The errata shipped with the library.
const std::vector<RouteErratum>& route_errata();
/// route_value with shipped errata applied.
Nimber corrected_route_value(const RouteCategory& cat);

/// Closed-form Grundy value, where one exists (all families but K_{m,n}).
/// Routes use the corrected table.
std::optional<Nimber> oracle_value(const FamilySpec& spec);
/// Closed-form outcome for every family.
Outcome oracle_outcome(const FamilySpec& spec);

// --- structural detection --------------------------------------------------

/// Every family member with exactly n vertices, routes restricted to the
/// table alphabet.
std::vector<FamilySpec> family_shapes(std::size_t n);

/// Canonical keys of every family member with at most max_vertices
/// vertices, under both color assignments.
class FamilyIndex {
 public:
  explicit FamilyIndex(std::size_t max_vertices);

  /// Family members isomorphic to `p` (empty if none).
  std::span<const FamilySpec> match(const Position& p) const;

 private:
  std::unordered_map<CanonicalKey, std::vector<FamilySpec>> by_key_;
};

}  // namespace flagcolor
