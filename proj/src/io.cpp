#include "flagcolor/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "flagcolor/error.hpp"

namespace flagcolor {

namespace {

constexpr std::array<std::string_view, 7> kRegistered = {"white", "black", "red",  "blue",
                                                         "yellow", "green", "buff"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class Callback>
void for_each_line(std::string_view text, Callback cb) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    ++line_no;
    cb(text.substr(start, nl - start), line_no);
    if (nl == text.size()) break;
    start = nl + 1;
  }
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

Palette palette_from_names(const std::vector<std::string>& names) {
  bool any = std::any_of(names.begin(), names.end(), [](const std::string& n) { return !n.empty(); });
  if (!any) return {};
  return std::make_shared<const std::vector<std::string>>(names);
}

// Whether every color has a registered name and the names' fixed ids
// increase with the normalized ids (so names survive a re-parse).
bool names_round_trip(const Position& p) {
  if (!p.palette()) return false;
  int previous = -1;
  for (std::size_t c = 0; c < p.color_count(); ++c) {
    if (c >= p.palette()->size()) return false;
    auto id = registered_color((*p.palette())[c]);
    if (!id || static_cast<int>(*id) <= previous) return false;
    previous = *id;
  }
  return true;
}

std::string display_color(const Position& p, ColorId c) {
  static constexpr std::array<std::string_view, 7> dot = {"white",  "black", "red",    "blue",
                                                          "yellow", "green", "#f0dc82"};
  static constexpr std::array<std::string_view, 8> fallback = {
      "#ffffff", "#333333", "#d62728", "#1f77b4", "#ffdd00", "#2ca02c", "#f0dc82", "#9467bd"};
  if (p.palette() && c < p.palette()->size()) {
    if (auto id = registered_color((*p.palette())[c])) return std::string(dot[*id]);
  }
  return std::string(fallback[c % fallback.size()]);
}

}  // namespace

std::optional<ColorId> registered_color(std::string_view name) {
  for (std::size_t i = 0; i < kRegistered.size(); ++i) {
    if (kRegistered[i] == name) return static_cast<ColorId>(i);
  }
  return std::nullopt;
}

std::optional<std::string_view> registered_name(ColorId id) {
  if (id < kRegistered.size()) return kRegistered[id];
  return std::nullopt;
}

Position parse_graph(std::string_view text) {
  bool header = false;
  std::map<std::uint64_t, Vertex> index;
  std::vector<ColorId> colors;
  std::vector<std::string> names;
  struct PendingEdge {
    std::uint64_t u, v;
    std::size_t line;
  };
  std::vector<PendingEdge> pending;

  for_each_line(text, [&](std::string_view raw, std::size_t line) {
    std::string_view s = raw.substr(0, raw.find('#'));
    s = trim(s);
    if (s.empty()) return;
    auto words = split_words(s);
    if (!header) {
      if (words.size() != 2 || words[0] != "flagcolor-graph" || words[1] != "1") {
        throw Error(ErrorCode::syntax, "expected header 'flagcolor-graph 1'", line);
      }
      header = true;
      return;
    }
    if (words[0] == "v") {
      if (words.size() != 3) throw Error(ErrorCode::syntax, "expected 'v <id> <color>'", line);
      auto id = parse_uint(words[1]);
      if (!id) throw Error(ErrorCode::syntax, "bad vertex id '" + std::string(words[1]) + "'", line);
      ColorId color = 0;
      std::string name;
      if (auto number = parse_uint(words[2])) {
        if (*number >= kMaxColors) throw Error(ErrorCode::syntax, "color id out of range", line);
        color = static_cast<ColorId>(*number);
      } else if (auto named = registered_color(words[2])) {
        color = *named;
        name = std::string(words[2]);
      } else {
        throw Error(ErrorCode::syntax, "unknown color '" + std::string(words[2]) + "'", line);
      }
      if (!index.try_emplace(*id, static_cast<Vertex>(colors.size())).second) {
        throw Error(ErrorCode::duplicate_vertex, "vertex " + std::to_string(*id), line);
      }
      colors.push_back(color);
      if (names.size() <= color) names.resize(color + 1);
      if (!name.empty()) names[color] = name;
    } else if (words[0] == "e") {
      if (words.size() != 3) throw Error(ErrorCode::syntax, "expected 'e <u> <v>'", line);
      auto u = parse_uint(words[1]);
      auto v = parse_uint(words[2]);
      if (!u || !v) throw Error(ErrorCode::syntax, "bad edge endpoint", line);
      if (*u == *v) throw Error(ErrorCode::self_loop, "vertex " + std::to_string(*u), line);
      pending.push_back({*u, *v, line});
    } else {
      throw Error(ErrorCode::syntax, "unknown directive '" + std::string(words[0]) + "'", line);
    }
  });
  if (!header) throw Error(ErrorCode::syntax, "missing header 'flagcolor-graph 1'", 1);
  if (colors.empty()) throw Error(ErrorCode::syntax, "graph has no vertices");

  std::vector<Edge> edges;
  edges.reserve(pending.size());
  for (const PendingEdge& e : pending) {
    auto iu = index.find(e.u);
    auto iv = index.find(e.v);
    if (iu == index.end() || iv == index.end()) {
      const std::uint64_t missing = iu == index.end() ? e.u : e.v;
      throw Error(ErrorCode::unknown_vertex, "edge to undeclared vertex " + std::to_string(missing), e.line);
    }
    edges.push_back({iu->second, iv->second});
  }
  return contract(ColoredGraph(std::move(colors), edges), palette_from_names(names));
}

Position parse_grid(std::string_view text) {
  std::vector<std::string_view> rows;
  std::size_t first_row_line = 0;
  for_each_line(text, [&](std::string_view raw, std::size_t line) {
    std::string_view s = raw;
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    if (rows.empty() && !s.empty() && s.front() == '#') return;
    if (trim(s).empty()) return;
    for (char ch : s) {
      if (ch <= ' ' || ch > '~') {
        throw Error(ErrorCode::invalid_grid, "rows must be printable non-space characters", line);
      }
    }
    if (!rows.empty() && s.size() != rows.front().size()) {
      throw Error(ErrorCode::invalid_grid,
                  "ragged row: expected width " + std::to_string(rows.front().size()) + ", got " +
                      std::to_string(s.size()),
                  line);
    }
    if (rows.empty()) first_row_line = line;
    rows.push_back(s);
  });
  if (rows.empty()) throw Error(ErrorCode::invalid_grid, "empty grid");
  (void)first_row_line;

  const std::size_t height = rows.size();
  const std::size_t width = rows.front().size();
  std::array<int, 128> char_color;
  char_color.fill(-1);
  for (auto r : rows) {
    for (char ch : r) char_color[static_cast<unsigned char>(ch)] = 0;
  }
  std::vector<std::string> names;
  for (int ch = 0; ch < 128; ++ch) {
    if (char_color[ch] < 0) continue;
    char_color[ch] = static_cast<int>(names.size());
    names.emplace_back(1, static_cast<char>(ch));
  }

  // Regions by 4-connected flood fill, numbered in row-major order of their first cell.
  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> region(height * width, kUnset);
  std::vector<ColorId> colors;
  std::vector<std::size_t> stack;
  const int dr[4] = {-1, 1, 0, 0};
  const int dc[4] = {0, 0, -1, 1};
  for (std::size_t start = 0; start < height * width; ++start) {
    if (region[start] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(colors.size());
    const char ch = rows[start / width][start % width];
    colors.push_back(static_cast<ColorId>(char_color[static_cast<unsigned char>(ch)]));
    region[start] = id;
    stack.assign(1, start);
    while (!stack.empty()) {
      const std::size_t cell = stack.back();
      stack.pop_back();
      const auto r = static_cast<long>(cell / width), c = static_cast<long>(cell % width);
      for (int d = 0; d < 4; ++d) {
        const long nr = r + dr[d], nc = c + dc[d];
        if (nr < 0 || nc < 0 || nr >= static_cast<long>(height) || nc >= static_cast<long>(width)) continue;
        const std::size_t next = static_cast<std::size_t>(nr) * width + static_cast<std::size_t>(nc);
        if (region[next] == kUnset && rows[nr][nc] == ch) {
          region[next] = id;
          stack.push_back(next);
        }
      }
    }
  }
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      const std::uint32_t here = region[r * width + c];
      if (c + 1 < width && region[r * width + c + 1] != here) edges.push_back({here, region[r * width + c + 1]});
      if (r + 1 < height && region[(r + 1) * width + c] != here) edges.push_back({here, region[(r + 1) * width + c]});
    }
  }
  ColoredGraph g(std::move(colors), edges);
  if (!g.is_connected()) throw std::logic_error("grid region graph must be connected");
  return Position(std::move(g), palette_from_names(names));
}

std::string format_graph(const Position& p) {
  const ColoredGraph& g = p.graph();
  const bool named = names_round_trip(p);
  std::ostringstream out;
  out << "flagcolor-graph 1\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "v " << v << ' ';
    if (named) out << (*p.palette())[g.color(v)];
    else out << static_cast<unsigned>(g.color(v));
    out << '\n';
  }
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string format_json(const Position& p) {
  const ColoredGraph& g = p.graph();
  nlohmann::ordered_json j;
  j["format"] = "flagcolor-position";
  j["version"] = 1;
  nlohmann::ordered_json colors = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < p.color_count(); ++c) {
    std::string name;
    if (p.palette() && c < p.palette()->size()) name = (*p.palette())[c];
    colors.push_back({{"id", c}, {"name", name}});
  }
  j["colors"] = colors;
  nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) vertices.push_back(static_cast<unsigned>(g.color(v)));
  j["vertex_colors"] = vertices;
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

Position parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::syntax, std::string("json: ") + e.what());
  }
  try {
    if (j.at("format") != "flagcolor-position" || j.at("version") != 1) {
      throw Error(ErrorCode::syntax, "json: expected flagcolor-position version 1");
    }
    std::vector<ColorId> colors;
    for (const auto& c : j.at("vertex_colors")) {
      const unsigned value = c.get<unsigned>();
      if (value >= kMaxColors) throw Error(ErrorCode::syntax, "json: color id out of range");
      colors.push_back(static_cast<ColorId>(value));
    }
    std::vector<std::string> names;
    if (j.contains("colors")) {
      for (const auto& c : j.at("colors")) {
        const auto id = c.at("id").get<std::size_t>();
        if (id >= kMaxColors) throw Error(ErrorCode::syntax, "json: color id out of range");
        if (names.size() <= id) names.resize(id + 1);
        names[id] = c.value("name", "");
      }
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>()});
    if (colors.empty()) throw Error(ErrorCode::syntax, "json: no vertices");
    return contract(ColoredGraph(std::move(colors), edges), palette_from_names(names));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::syntax, std::string("json: ") + e.what());
  }
}

std::string format_move(const Position& p, Move m) {
  return std::to_string(m.vertex) + " " + p.color_name(p.color(m.vertex)) + "->" +
         p.color_name(m.new_color);
}

std::string format_dot(const Position& p, std::string_view name) {
  const ColoredGraph& g = p.graph();
  std::ostringstream out;
  out << "graph " << name << " {\n  node [shape=circle, style=filled];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::string fill = display_color(p, g.color(v));
    out << "  " << v << " [label=\"" << v << "\", fillcolor=\"" << fill << "\", color=\"black\", tooltip=\""
        << p.color_name(g.color(v)) << "\"];\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

std::optional<InputFormat> format_from_path(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".graph")) return InputFormat::graph;
  if (ends_with(".grid")) return InputFormat::grid;
  if (ends_with(".json")) return InputFormat::json;
  return std::nullopt;
}

Position parse_position(std::string_view text, InputFormat format) {
  switch (format) {
    case InputFormat::graph: return parse_graph(text);
    case InputFormat::grid: return parse_grid(text);
    case InputFormat::json: return parse_json(text);
  }
  throw std::logic_error("unknown input format");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace flagcolor
