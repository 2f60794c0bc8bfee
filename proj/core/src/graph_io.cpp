#include "failoc/graph_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "failoc/errors.hpp"

namespace failoc {

namespace {

bool valid_token(const std::string& t) {
  if (t.empty()) return false;
  for (unsigned char c : t) {
    if (!std::isalnum(c) && c != '_') return false;
  }
  return true;
}

}  // namespace

graph parse_edge_list(std::string_view text) {
  std::vector<node_id> nodes;
  std::vector<edge> edges;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++lineno;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::istringstream in{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(std::move(t));
    if (tokens.empty()) continue;

    for (const std::string& t : tokens) {
      if (!valid_token(t)) {
        throw malformed_line("line " + std::to_string(lineno) +
                             ": bad token '" + t + "'");
      }
    }
    if (tokens.size() == 1) {
      nodes.push_back(std::move(tokens[0]));
    } else if (tokens.size() == 2) {
      if (tokens[0] == tokens[1]) {
        throw self_loop("line " + std::to_string(lineno) + ": self loop at '" +
                        tokens[0] + "'");
      }
      edge e = edge::make(std::move(tokens[0]), std::move(tokens[1]));
      for (const edge& seen : edges) {
        if (seen == e) {
          throw duplicate_edge("line " + std::to_string(lineno) +
                               ": duplicate edge " + e.a + " " + e.b);
        }
      }
      edges.push_back(std::move(e));
    } else {
      throw malformed_line("line " + std::to_string(lineno) +
                           ": expected one or two tokens");
    }
  }
  for (const edge& e : edges) {
    nodes.push_back(e.a);
    nodes.push_back(e.b);
  }
  return graph::make(std::move(nodes), std::move(edges));
}

std::string serialize_edge_list(const graph& g) {
  std::string out;
  for (const node_id& v : g.nodes()) {
    if (g.degree(v) == 0) {
      out += v;
      out += '\n';
    }
  }
  for (const edge& e : g.edges()) {
    out += e.a;
    out += ' ';
    out += e.b;
    out += '\n';
  }
  return out;
}

std::string to_dot(const graph& g, const monitor_set& monitors) {
  for (const node_id& m : monitors.nodes) {
    if (!g.has_node(m)) throw unknown_node("monitor '" + m + "' not in graph");
  }
  std::string out = "graph G {\n";
  for (const node_id& v : g.nodes()) {
    out += "  \"" + v + "\"";
    if (monitors.contains(v)) {
      out += " [shape=doublecircle, style=filled, fillcolor=gold]";
    }
    out += ";\n";
  }
  for (const edge& e : g.edges()) {
    out += "  \"" + e.a + "\" -- \"" + e.b + "\";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace failoc
