#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "flagcolor/graph.hpp"

namespace flagcolor {

/// Fixed ids for the named colors accepted by the graph format.
/// white=0 black=1 red=2 blue=3 yellow=4 green=5 buff=6.
std::optional<ColorId> registered_color(std::string_view name);
std::optional<std::string_view> registered_name(ColorId id);

/// Parses the `flagcolor-graph 1` text format and contracts the result.
/// Throws Error with the offending line for syntax, duplicate_vertex,
/// unknown_vertex and self_loop; Error(disconnected) for disconnected input.
Position parse_graph(std::string_view text);

/// Parses a rectangular character grid into its region adjacency graph
/// (4-connectivity). Throws Error(invalid_grid) for ragged or empty input.
Position parse_grid(std::string_view text);

/// Graph-format text for `p`; parse_graph(format_graph(p)) is isomorphic to p.
std::string format_graph(const Position& p);

/// Machine-readable JSON form; see README for the schema.
std::string format_json(const Position& p);
Position parse_json(std::string_view text);

/// "31 red->blue": vertex id, old and new color names.
std::string format_move(const Position& p, Move m);

/// Graphviz DOT text with one filled node per vertex.
std::string format_dot(const Position& p, std::string_view name = "flagcolor");

enum class InputFormat { graph, grid, json };

/// Format from a file extension (.graph, .grid, .json); nullopt if unknown.
std::optional<InputFormat> format_from_path(std::string_view path);
Position parse_position(std::string_view text, InputFormat format);
std::string read_file(const std::string& path);

}  // namespace flagcolor
