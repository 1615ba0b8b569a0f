#include "flagcolor/families.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "assets.hpp"
#include "flagcolor/error.hpp"

namespace flagcolor {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Incremental builder for 2-colored graphs.
class Builder {
 public:
  Vertex add(ColorId c) {
    colors_.push_back(c);
    return static_cast<Vertex>(colors_.size() - 1);
  }
  Vertex add_neighbor(Vertex of) {
    Vertex v = add(colors_[of] ^ 1);
    link(of, v);
    return v;
  }
  void link(Vertex a, Vertex b) { edges_.push_back({a, b}); }
  // Path of `length` edges from `from`; returns the far end.
  Vertex extend(Vertex from, unsigned length) {
    for (unsigned s = 0; s < length; ++s) from = add_neighbor(from);
    return from;
  }
  Position finish() { return contract(ColoredGraph(std::move(colors_), edges_)); }

 private:
  std::vector<ColorId> colors_;
  std::vector<Edge> edges_;
};

std::string join(std::span<const unsigned> xs) {
  std::string out;
  for (std::size_t n = 0; n < xs.size(); ++n) {
    if (n) out += ',';
    out += std::to_string(xs[n]);
  }
  return out;
}

// Lengths sorted, with repeated 0s and 1s collapsed.
std::vector<unsigned> normalized_lengths(std::span<const unsigned> lengths) {
  std::vector<unsigned> ls(lengths.begin(), lengths.end());
  std::sort(ls.begin(), ls.end());
  std::vector<unsigned> out;
  for (unsigned l : ls) {
    if (l <= 1 && !out.empty() && out.back() == l) continue;
    out.push_back(l);
  }
  return out;
}

void check_route(std::span<const unsigned> ls) {
  if (ls.empty() || ls.back() == 0) {
    throw Error(ErrorCode::invalid_spec, "route needs a path of positive length");
  }
  for (unsigned l : ls) {
    if (l % 2 != ls.front() % 2) {
      throw Error(ErrorCode::invalid_spec, "route lengths of mixed parity: " + join(ls));
    }
  }
}

Position build_route(const Route& r) {
  std::vector<unsigned> ls = normalized_lengths(r.lengths);
  check_route(ls);
  Builder b;
  const Vertex u = b.add(0);
  const bool merged = ls.front() == 0;
  const Vertex v = merged ? u : b.add(static_cast<ColorId>(ls.front() % 2));
  for (unsigned l : ls) {
    if (l == 0) continue;
    if (l == 1) {
      b.link(u, v);
    } else if (merged && l == 2) {
      b.add_neighbor(u);
    } else {
      b.link(b.extend(u, l - 1), v);
    }
  }
  return b.finish();
}

// Route table slots: core 0..3, then even >= 4, odd >= 5.
std::size_t slot(unsigned x) { return x < 4 ? x : (x % 2 == 0 ? 4 : 5); }

using RouteTable = std::array<std::array<std::uint8_t, 6>, 6>;

constexpr RouteTable kMergedK1 = {{{1, 1, 1, 1, 1, 1},
                                   {2, 0, 3, 0, 3, 0},
                                   {1, 1, 1, 1, 1, 1},
                                   {2, 0, 3, 0, 3, 0},
                                   {1, 1, 1, 1, 1, 1},
                                   {2, 0, 3, 0, 3, 0}}};
constexpr RouteTable kMergedK2 = {{{2, 0, 2, 0, 2, 0},
                                   {1, 4, 1, 4, 1, 4},
                                   {2, 0, 2, 0, 2, 0},
                                   {1, 4, 1, 4, 1, 4},
                                   {2, 0, 2, 0, 2, 0},
                                   {1, 4, 1, 4, 1, 4}}};
constexpr RouteTable kMergedK3 = {{{1, 0, 1, 0, 1, 0},
                                   {2, 3, 2, 3, 2, 3},
                                   {1, 0, 1, 0, 1, 0},
                                   {2, 3, 2, 3, 2, 3},
                                   {1, 0, 1, 0, 1, 0},
                                   {2, 3, 2, 3, 2, 3}}};
constexpr RouteTable kAdjacent = {{{1, 1, 1, 1, 1, 1},
                                   {0, 0, 0, 0, 0, 0},
                                   {1, 1, 1, 1, 1, 1},
                                   {0, 0, 0, 0, 0, 0},
                                   {1, 1, 1, 1, 1, 1},
                                   {0, 0, 0, 0, 0, 0}}};
constexpr RouteTable kDistinctK0 = {{{0, 1, 0, 0, 0, 0},
                                     {2, 1, 2, 1, 2, 1},
                                     {0, 1, 0, 1, 0, 1},
                                     {0, 1, 2, 1, 2, 1},
                                     {0, 1, 0, 1, 0, 1},
                                     {0, 1, 2, 1, 2, 1}}};
constexpr RouteTable kDistinctK1 = {{{0, 1, 1, 1, 1, 1},
                                     {0, 3, 0, 3, 0, 3},
                                     {0, 1, 0, 1, 0, 1},
                                     {0, 3, 0, 3, 0, 3},
                                     {0, 1, 0, 1, 0, 1},
                                     {0, 3, 0, 3, 0, 3}}};
constexpr RouteTable kDistinctK2 = {{{0, 2, 0, 2, 0, 2},
                                     {0, 1, 0, 1, 0, 1},
                                     {0, 1, 0, 1, 0, 1},
                                     {0, 1, 0, 1, 0, 1},
                                     {0, 1, 0, 1, 0, 1},
                                     {0, 1, 0, 1, 0, 1}}};
constexpr RouteTable kDistinctK3 = {{{0, 1, 0, 1, 0, 1},
                                     {0, 1, 0, 1, 0, 1},
                                     {0, 1, 0, 1, 0, 1},
                                     {0, 1, 0, 1, 0, 1},
                                     {0, 1, 0, 1, 0, 1},
                                     {0, 1, 0, 1, 0, 1}}};
constexpr RouteTable kOddDistinct = {{{0, 2, 1, 1, 1, 1},
                                      {0, 0, 0, 0, 0, 0},
                                      {1, 3, 1, 2, 1, 2},
                                      {2, 0, 0, 0, 0, 0},
                                      {1, 3, 1, 2, 1, 2},
                                      {2, 0, 0, 0, 0, 0}}};

const RouteTable& table_for(const RouteCategory& c) {
  const unsigned k = std::min(c.k, 3u);
  switch (c.endpoints) {
    case Endpoints::merged:
      return k == 1 ? kMergedK1 : k == 2 ? kMergedK2 : kMergedK3;
    case Endpoints::adjacent:
      return kAdjacent;
    case Endpoints::distinct:
      if (c.parity == Parity::odd) return kOddDistinct;
      return k == 0 ? kDistinctK0 : k == 1 ? kDistinctK1 : k == 2 ? kDistinctK2 : kDistinctK3;
  }
  return kMergedK3;
}

void check_category(const RouteCategory& c) {
  if (c.parity == Parity::odd && c.endpoints == Endpoints::merged) {
    throw Error(ErrorCode::invalid_spec, "odd route cannot have merged endpoints");
  }
  if (c.parity == Parity::even && c.endpoints == Endpoints::adjacent) {
    throw Error(ErrorCode::invalid_spec, "even route cannot have adjacent endpoints");
  }
  if (c.parity == Parity::odd && c.k != 0) {
    throw Error(ErrorCode::invalid_spec, "odd route has no 6-paths");
  }
  if (c.endpoints == Endpoints::distinct && c.i + c.j + c.k == 0) {
    throw Error(ErrorCode::invalid_spec, "distinct endpoints without paths: disconnected");
  }
}

std::optional<RouteCategory> parse_category_name(std::string_view s) {
  for (Parity p : {Parity::even, Parity::odd}) {
    for (Endpoints e : {Endpoints::merged, Endpoints::adjacent, Endpoints::distinct}) {
      if (category_name(p, e) == s) return RouteCategory{p, e};
    }
  }
  return std::nullopt;
}

}  // namespace

std::string describe(const FamilySpec& spec) {
  return std::visit(
      Overloaded{
          [](const Star& s) { return "star(" + std::to_string(s.i) + ")"; },
          [](const Diamond& d) {
            return "diamond(" + std::to_string(d.p) + "," + std::to_string(d.d) + ")";
          },
          [](const Path& p) { return "path(" + std::to_string(p.x) + ")"; },
          [](const Broom& b) {
            return "broom(" + std::to_string(b.i) + "," + std::to_string(b.l) + ")";
          },
          [](const CompleteBipartite& k) {
            return "bipartite(" + std::to_string(k.m) + "," + std::to_string(k.n) + ")";
          },
          [](const Route& r) { return "route(" + join(normalized_lengths(r.lengths)) + ")"; },
      },
      spec);
}

Position build(const FamilySpec& spec) {
  return std::visit(
      Overloaded{
          [](const Star& s) {
            Builder b;
            const Vertex c = b.add(0);
            for (unsigned n = 0; n < s.i; ++n) b.add_neighbor(c);
            return b.finish();
          },
          [](const Diamond& d) {
            Builder b;
            const Vertex c = b.add(0);
            for (unsigned n = 0; n < d.p; ++n) b.add_neighbor(c);
            for (unsigned n = 0; n < d.d; ++n) {
              const Vertex u = b.add_neighbor(c);
              const Vertex w = b.add_neighbor(c);
              const Vertex x = b.add_neighbor(u);
              b.link(w, x);
            }
            return b.finish();
          },
          [](const Path& p) {
            Builder b;
            b.extend(b.add(0), p.x);
            return b.finish();
          },
          [](const Broom& br) {
            Builder b;
            const Vertex c = b.add(0);
            for (unsigned n = 0; n < br.i; ++n) b.add_neighbor(c);
            b.extend(c, br.l);
            return b.finish();
          },
          [](const CompleteBipartite& k) {
            if (k.m == 0 || k.n == 0) {
              throw Error(ErrorCode::invalid_spec, "complete bipartite sides must be non-empty");
            }
            Builder b;
            std::vector<Vertex> left;
            for (unsigned n = 0; n < k.m; ++n) left.push_back(b.add(0));
            for (unsigned n = 0; n < k.n; ++n) {
              const Vertex r = b.add(1);
              for (Vertex l : left) b.link(l, r);
            }
            return b.finish();
          },
          [](const Route& r) { return build_route(r); },
      },
      spec);
}

std::size_t vertex_count(const FamilySpec& spec) {
  return std::visit(
      Overloaded{
          [](const Star& s) -> std::size_t { return 1 + s.i; },
          [](const Diamond& d) -> std::size_t { return 1 + d.p + 3 * std::size_t{d.d}; },
          [](const Path& p) -> std::size_t { return 1 + p.x; },
          [](const Broom& b) -> std::size_t { return 1 + b.i + b.l; },
          [](const CompleteBipartite& k) -> std::size_t { return std::size_t{k.m} + k.n; },
          [](const Route& r) -> std::size_t {
            std::vector<unsigned> ls = normalized_lengths(r.lengths);
            check_route(ls);
            std::size_t n = ls.front() == 0 ? 1 : 2;
            for (unsigned l : ls) n += l > 1 ? l - 1 : 0;
            return n;
          },
      },
      spec);
}

Nimber star_value(unsigned i) {
  if (i == 0) return {0};
  return {i % 2 == 1 ? 1u : 2u};
}

Nimber diamond_value(unsigned p, unsigned d) {
  constexpr std::array<std::uint8_t, 7> odd_row = {1, 3, 1, 2, 1, 1, 2};
  constexpr std::array<std::uint8_t, 7> even_row = {2, 0, 0, 0, 0, 0, 0};
  if (p == 0) return {0};
  const std::size_t col = d < 5 ? d : 5 + d % 2;
  return {p % 2 == 1 ? odd_row[col] : even_row[col]};
}

Nimber path_value(unsigned x) { return {x % 3}; }

Nimber broom_value(unsigned i, unsigned l) {
  constexpr std::uint8_t table[5][6] = {
      {0, 1, 2, 0, 1, 2},  // i = 0
      {1, 2, 0, 1, 2, 0},  // i = 1
      {2, 1, 3, 0, 1, 2},  // i = 2
      {1, 2, 0, 1, 2, 0},  // i = 2k+3
      {2, 1, 2, 0, 1, 2},  // i = 2k+4
  };
  const std::size_t row = i < 3 ? i : (i % 2 == 1 ? 3 : 4);
  const std::size_t col = l < 3 ? l : 3 + (l - 3) % 3;
  return {table[row][col]};
}

Outcome bipartite_outcome(unsigned m, unsigned n) {
  return m >= 2 && n >= 2 ? Outcome::P : Outcome::N;
}

std::string_view category_name(Parity parity, Endpoints endpoints) {
  const bool even = parity == Parity::even;
  switch (endpoints) {
    case Endpoints::merged:
      return even ? "even-merged" : "odd-merged";
    case Endpoints::adjacent:
      return even ? "even-adjacent" : "odd-adjacent";
    case Endpoints::distinct:
      return even ? "even-distinct" : "odd-distinct";
  }
  return "";
}

std::string describe(const RouteCategory& c) {
  std::string out(category_name(c.parity, c.endpoints));
  out += " i=" + std::to_string(c.i) + " j=" + std::to_string(c.j);
  if (c.parity == Parity::even) out += " k=" + std::to_string(c.k);
  return out;
}

RouteCategory route_category(std::span<const unsigned> lengths) {
  std::vector<unsigned> ls = normalized_lengths(lengths);
  check_route(ls);
  RouteCategory c;
  c.parity = ls.front() % 2 == 0 ? Parity::even : Parity::odd;
  c.endpoints = Endpoints::distinct;
  for (unsigned l : ls) {
    switch (l) {
      case 0: c.endpoints = Endpoints::merged; break;
      case 1: c.endpoints = Endpoints::adjacent; break;
      case 2:
      case 3: ++c.i; break;
      case 4:
      case 5: ++c.j; break;
      case 6: ++c.k; break;
      default:
        throw Error(ErrorCode::invalid_spec, "route length " + std::to_string(l) + " outside the tables");
    }
  }
  return c;
}

Route route_of(const RouteCategory& c) {
  check_category(c);
  Route r;
  const bool even = c.parity == Parity::even;
  if (c.endpoints == Endpoints::merged) r.lengths.push_back(0);
  if (c.endpoints == Endpoints::adjacent) r.lengths.push_back(1);
  r.lengths.insert(r.lengths.end(), c.i, even ? 2u : 3u);
  r.lengths.insert(r.lengths.end(), c.j, even ? 4u : 5u);
  r.lengths.insert(r.lengths.end(), c.k, 6u);
  return r;
}

Nimber route_value(const RouteCategory& c) {
  check_category(c);
  if (c.endpoints == Endpoints::merged && c.k == 0) return diamond_value(c.i, c.j);
  return {table_for(c)[slot(c.i)][slot(c.j)]};
}

bool route_is_p_position(const RouteCategory& c) { return route_value(c).value == 0; }

std::vector<RouteErratum> parse_route_errata(std::string_view text) {
  std::vector<RouteErratum> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string name;
    if (!(fields >> name)) continue;
    auto cat = parse_category_name(name);
    unsigned printed = 0;
    unsigned computed = 0;
    if (!cat || !(fields >> cat->i >> cat->j >> cat->k >> printed >> computed)) {
      throw Error(ErrorCode::syntax, "bad errata row", line_no);
    }
    out.push_back({*cat, {printed}, {computed}});
  }
  return out;
}

const std::vector<RouteErratum>& route_errata() {
  static const std::vector<RouteErratum> errata = parse_route_errata(detail::asset("route_errata"));
  return errata;
}

Nimber corrected_route_value(const RouteCategory& c) {
  for (const RouteErratum& e : route_errata()) {
    if (e.category == c) return e.computed;
  }
  return route_value(c);
}

std::optional<Nimber> oracle_value(const FamilySpec& spec) {
  return std::visit(
      Overloaded{
          [](const Star& s) -> std::optional<Nimber> { return star_value(s.i); },
          [](const Diamond& d) -> std::optional<Nimber> { return diamond_value(d.p, d.d); },
          [](const Path& p) -> std::optional<Nimber> { return path_value(p.x); },
          [](const Broom& b) -> std::optional<Nimber> { return broom_value(b.i, b.l); },
          [](const CompleteBipartite&) -> std::optional<Nimber> { return std::nullopt; },
          [](const Route& r) -> std::optional<Nimber> {
            return corrected_route_value(route_category(r.lengths));
          },
      },
      spec);
}

Outcome oracle_outcome(const FamilySpec& spec) {
  if (const auto* k = std::get_if<CompleteBipartite>(&spec)) return bipartite_outcome(k->m, k->n);
  return outcome_of(*oracle_value(spec));
}

std::vector<FamilySpec> family_shapes(std::size_t n) {
  std::vector<FamilySpec> out;
  if (n == 0) return out;
  const auto un = static_cast<unsigned>(n);
  out.push_back(Star{un - 1});
  out.push_back(Path{un - 1});
  for (unsigned d = 1; 1 + 3 * d <= un; ++d) out.push_back(Diamond{un - 1 - 3 * d, d});
  for (unsigned l = 1; l + 1 <= un; ++l) out.push_back(Broom{un - 1 - l, l});
  for (unsigned m = 1; m < un; ++m) out.push_back(CompleteBipartite{m, un - m});
  // Even routes: merged n = 1 + i + 3j + 5k, distinct n = 2 + i + 3j + 5k.
  for (Endpoints e : {Endpoints::merged, Endpoints::distinct}) {
    const unsigned base = e == Endpoints::merged ? 1 : 2;
    for (unsigned k = 0; base + 5 * k <= un; ++k) {
      for (unsigned j = 0; base + 5 * k + 3 * j <= un; ++j) {
        const unsigned i = un - base - 5 * k - 3 * j;
        if (i + j + k == 0) continue;
        out.push_back(route_of({Parity::even, e, i, j, k}));
      }
    }
  }
  // Odd routes: n = 2 + 2i + 4j.
  if (n >= 2 && n % 2 == 0) {
    for (unsigned j = 0; 2 + 4 * j <= un; ++j) {
      const unsigned rest = un - 2 - 4 * j;
      const unsigned i = rest / 2;
      out.push_back(route_of({Parity::odd, Endpoints::adjacent, i, j, 0}));
      if (i + j > 0) out.push_back(route_of({Parity::odd, Endpoints::distinct, i, j, 0}));
    }
  }
  return out;
}

FamilyIndex::FamilyIndex(std::size_t max_vertices) {
  constexpr std::array<ColorId, 2> swap = {1, 0};
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    for (FamilySpec& spec : family_shapes(n)) {
      const Position p = build(spec);
      by_key_[canonical_key(p)].push_back(spec);
      if (p.color_count() == 2) {
        const CanonicalKey swapped = canonical_key(recolor(p, swap));
        if (swapped != canonical_key(p)) by_key_[swapped].push_back(spec);
      }
    }
  }
}

std::span<const FamilySpec> FamilyIndex::match(const Position& p) const {
  auto it = by_key_.find(canonical_key(p));
  if (it == by_key_.end()) return {};
  return it->second;
}

}  // namespace flagcolor
