#pragma once

#include <string>
#include <string_view>

#include "failoc/graph.hpp"

namespace failoc {

/// Parses the edge-list format: one "<token> <token>" edge per line,
/// a bare "<token>" line declares an isolated node, '#' starts a comment,
/// blank lines are ignored. Tokens are [A-Za-z0-9_]+. Throws
/// malformed_line, self_loop, or duplicate_edge.
graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list: isolated nodes first, then edges, each on
/// its own line, sorted. Byte-stable for a given graph.
std::string serialize_edge_list(const graph& g);

/// Graphviz document with monitors drawn as filled double circles.
/// Byte-stable for given inputs. Throws unknown_node if a monitor is not
/// in the graph.
std::string to_dot(const graph& g, const monitor_set& monitors);

}  // namespace failoc
