#include "flagcolor/search.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <numeric>
#include <set>
#include <sstream>

#include "flagcolor/canon.hpp"
#include "flagcolor/error.hpp"
#include "flagcolor/families.hpp"
#include "flagcolor/io.hpp"
#include "flagcolor/solver.hpp"
#include "parallel.hpp"

namespace flagcolor {

namespace {

struct Keyed {
  CanonicalKey key;
  ColoredGraph graph;
};

bool connected_without(const ColoredGraph& g, Vertex removed) {
  const std::size_t n = g.vertex_count();
  if (n <= 2) return true;
  std::vector<char> seen(n, 0);
  seen[removed] = 1;
  const Vertex start = removed == 0 ? 1 : 0;
  std::vector<Vertex> stack = {start};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n - 1;
}

CanonicalKey marked_key(const ColoredGraph& g, Vertex v, ColorId mark) {
  std::vector<ColorId> colors(g.colors().begin(), g.colors().end());
  colors[v] = mark;
  const std::vector<Edge> edges = g.edges();
  return canonical_key(ColoredGraph(std::move(colors), edges));
}

// Canonical augmentation: keep `child` (whose new vertex is `added`) iff
// `added` is in the orbit of the non-cut vertex with the largest
// canonical index.
bool is_canonical_extension(const ColoredGraph& child, const CanonicalForm& form, Vertex added,
                            ColorId mark) {
  Vertex m = added;
  for (std::size_t i = form.labeling.size(); i-- > 0;) {
    if (connected_without(child, form.labeling[i])) {
      m = form.labeling[i];
      break;
    }
  }
  if (m == added || form.orbit[m] == form.orbit[added]) return true;
  if (child.color(m) != child.color(added) || child.degree(m) != child.degree(added)) return false;
  return marked_key(child, m, mark) == marked_key(child, added, mark);
}

std::vector<Keyed> children_of(const ColoredGraph& parent, std::size_t color_count) {
  const std::size_t n = parent.vertex_count();
  const auto added = static_cast<Vertex>(n);
  const auto mark = static_cast<ColorId>(color_count);
  const std::vector<Edge> base = parent.edges();
  std::vector<Keyed> out;
  std::set<CanonicalKey> seen;
  for (std::size_t c = 0; c < color_count; ++c) {
    std::vector<Vertex> allowed;
    for (Vertex v = 0; v < n; ++v) {
      if (parent.color(v) != c) allowed.push_back(v);
    }
    const std::size_t subsets = std::size_t{1} << allowed.size();
    for (std::size_t s = 1; s < subsets; ++s) {
      std::vector<Edge> edges = base;
      for (std::size_t b = 0; b < allowed.size(); ++b) {
        if (s >> b & 1) edges.push_back({allowed[b], added});
      }
      std::vector<ColorId> colors(parent.colors().begin(), parent.colors().end());
      colors.push_back(static_cast<ColorId>(c));
      ColoredGraph child(std::move(colors), edges);
      CanonicalForm form = canonical_form(child);
      if (seen.count(form.key)) continue;
      if (!is_canonical_extension(child, form, added, mark)) continue;
      seen.insert(form.key);
      out.push_back({std::move(form.key), std::move(child)});
    }
  }
  return out;
}

bool contiguous_colors(const ColoredGraph& g) {
  std::vector<char> used(kMaxColors + 1, 0);
  for (ColorId c : g.colors()) used[c] = 1;
  const std::size_t k = g.color_count();
  return std::all_of(used.begin(), used.begin() + k, [](char u) { return u != 0; });
}

// Smallest key over all permutations of the color ids in use.
CanonicalKey swap_class(const Position& p) {
  std::vector<ColorId> perm(p.color_count());
  std::iota(perm.begin(), perm.end(), ColorId{0});
  CanonicalKey best = canonical_key(p);
  while (std::next_permutation(perm.begin(), perm.end())) {
    best = std::min(best, canonical_key(recolor(p, perm)));
  }
  return best;
}

}  // namespace

std::size_t guard_limit(std::size_t color_count) {
  if (color_count <= 2) return 10;
  if (color_count == 3) return 7;
  return 6;
}

void validate(const SearchConfig& cfg) {
  if (cfg.max_vertices < 1) throw Error(ErrorCode::invalid_spec, "max_vertices must be at least 1");
  if (cfg.color_count < 2 || cfg.color_count >= kMaxColors) {
    throw Error(ErrorCode::invalid_spec, "color_count must be in 2.." + std::to_string(kMaxColors - 1));
  }
  if (!cfg.unsafe_no_guard && cfg.max_vertices > guard_limit(cfg.color_count)) {
    throw Error(ErrorCode::guard_exceeded,
                "max_vertices " + std::to_string(cfg.max_vertices) + " exceeds the guard of " +
                    std::to_string(guard_limit(cfg.color_count)) + " for " +
                    std::to_string(cfg.color_count) + " colors");
  }
}

std::vector<Position> enumerate_positions(const SearchConfig& cfg) {
  validate(cfg);
  const unsigned threads = detail::resolve_threads(cfg.threads);
  std::vector<Keyed> level;
  for (std::size_t c = 0; c < cfg.color_count; ++c) {
    ColoredGraph g({static_cast<ColorId>(c)}, {});
    level.push_back({canonical_key(g), std::move(g)});
  }
  std::vector<Position> out;
  for (std::size_t n = 1;; ++n) {
    std::sort(level.begin(), level.end(), [](const Keyed& a, const Keyed& b) { return a.key < b.key; });
    for (const Keyed& k : level) {
      if (contiguous_colors(k.graph)) out.emplace_back(k.graph);
    }
    if (n == cfg.max_vertices) break;
    std::vector<std::vector<Keyed>> next(level.size());
    detail::parallel_for(level.size(), threads,
                         [&](std::size_t i) { next[i] = children_of(level[i].graph, cfg.color_count); });
    level.clear();
    for (auto& batch : next) {
      for (Keyed& k : batch) level.push_back(std::move(k));
    }
  }
  return out;
}

SpectrumReport spectrum(const SearchConfig& cfg) {
  const std::vector<Position> positions = enumerate_positions(cfg);
  const unsigned threads = detail::resolve_threads(cfg.threads);

  SolverOptions options;
  options.threads = 1;
  Solver solver(options);
  std::vector<Nimber> values(positions.size());
  detail::parallel_for(positions.size(), threads, [&](std::size_t i) { values[i] = solver.grundy(positions[i]); });

  const FamilyIndex families(cfg.max_vertices);
  SpectrumReport r;
  r.max_vertices = cfg.max_vertices;
  r.color_count = cfg.color_count;
  std::set<CanonicalKey> seen_keys;
  std::set<CanonicalKey> classes;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const Position& p = positions[i];
    if (r.sizes.empty() || r.sizes.back().vertices != p.vertex_count()) {
      r.sizes.push_back({});
      r.sizes.back().vertices = p.vertex_count();
      classes.clear();
    }
    SizeReport& s = r.sizes.back();
    if (!seen_keys.insert(canonical_key(p)).second) {
      throw std::logic_error("search produced a duplicate canonical key");
    }
    const std::uint32_t v = values[i].value;
    ++s.positions;
    ++s.histogram[v];
    if (classes.insert(swap_class(p)).second) ++s.swap_merged;
    if (s.positions == 1 || v > s.max_grundy) {
      s.max_grundy = v;
      s.witness = format_graph(p);
    }
    const auto matches = families.match(p);
    if (!matches.empty()) ++s.family_shaped;
    for (const FamilySpec& spec : matches) {
      if (auto expected = oracle_value(spec)) {
        if (*expected != values[i]) {
          r.family_mismatches.push_back(describe(spec) + ": engine " + to_string(values[i]) + ", oracle " +
                                        to_string(*expected));
        }
      } else if (oracle_outcome(spec) != outcome_of(values[i])) {
        r.family_mismatches.push_back(describe(spec) + ": engine " + to_string(values[i]) + ", oracle outcome " +
                                      to_string(oracle_outcome(spec)));
      }
    }
    r.max_grundy = std::max(r.max_grundy, v);
  }
  for (const SizeReport& s : r.sizes) {
    if (s.max_grundy > kExpectedGrundyBound) {
      r.warnings.push_back("value *" + std::to_string(s.max_grundy) + " at " + std::to_string(s.vertices) +
                           " vertices exceeds *" + std::to_string(kExpectedGrundyBound));
    }
  }
  if (cfg.report_path) {
    std::ofstream file(*cfg.report_path);
    if (!file) throw Error(ErrorCode::io, "cannot write " + *cfg.report_path);
    file << format_json(r);
  }
  return r;
}

std::string format_text(const SpectrumReport& r) {
  auto cell = [](const auto& value, std::size_t width) {
    std::string s = std::to_string(value);
    return std::string(s.size() < width ? width - s.size() : 0, ' ') + s;
  };
  std::ostringstream out;
  out << "colors " << r.color_count << ", up to " << r.max_vertices << " vertices\n";
  out << "   n  positions  swap-merged  family  max  histogram\n";
  for (const SizeReport& s : r.sizes) {
    out << cell(s.vertices, 4) << cell(s.positions, 11) << cell(s.swap_merged, 13)
        << cell(s.family_shaped, 8) << cell(s.max_grundy, 5) << "  ";
    bool first = true;
    for (const auto& [value, count] : s.histogram) {
      out << (first ? "" : " ") << value << ":" << count;
      first = false;
    }
    out << "\n";
  }
  out << "max grundy " << r.max_grundy << "\n";
  for (const std::string& m : r.family_mismatches) out << "family mismatch: " << m << "\n";
  for (const std::string& w : r.warnings) out << "warning: " << w << "\n";
  return out.str();
}

std::string format_json(const SpectrumReport& r) {
  nlohmann::ordered_json j;
  j["format"] = "flagcolor-spectrum";
  j["version"] = 1;
  j["max_vertices"] = r.max_vertices;
  j["colors"] = r.color_count;
  j["max_grundy"] = r.max_grundy;
  j["sizes"] = nlohmann::ordered_json::array();
  for (const SizeReport& s : r.sizes) {
    nlohmann::ordered_json hist = nlohmann::ordered_json::object();
    for (const auto& [value, count] : s.histogram) hist[std::to_string(value)] = count;
    j["sizes"].push_back({{"vertices", s.vertices},
                          {"positions", s.positions},
                          {"swap_merged", s.swap_merged},
                          {"family_shaped", s.family_shaped},
                          {"max_grundy", s.max_grundy},
                          {"histogram", hist},
                          {"witness", s.witness}});
  }
  j["family_mismatches"] = r.family_mismatches;
  j["warnings"] = r.warnings;
  return j.dump(2) + "\n";
}

}  // namespace flagcolor
