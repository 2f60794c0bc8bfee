#include "failoc/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "failoc/errors.hpp"

namespace failoc {

edge edge::make(node_id x, node_id y) {
  if (x == y) throw self_loop("self loop at node '" + x + "'");
  if (y < x) std::swap(x, y);
  return edge{std::move(x), std::move(y)};
}

bool monitor_set::contains(const node_id& v) const {
  return std::binary_search(nodes.begin(), nodes.end(), v);
}

namespace {

void sort_unique(std::vector<node_id>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

graph graph::make(std::vector<node_id> nodes, std::vector<edge> edges) {
  sort_unique(nodes);
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (edges[i] == edges[i + 1]) {
      throw duplicate_edge("duplicate edge " + edges[i].a + " " + edges[i].b);
    }
  }
  graph g;
  g.nodes_ = std::move(nodes);
  g.edges_ = std::move(edges);
  for (const edge& e : g.edges_) {
    if (!g.has_node(e.a) || !g.has_node(e.b)) {
      throw unknown_endpoint("edge " + e.a + " " + e.b +
                             " has an endpoint outside the node set");
    }
  }
  return g;
}

graph graph::from_edges(std::vector<edge> edges) {
  std::vector<node_id> nodes;
  nodes.reserve(edges.size() * 2);
  for (const edge& e : edges) {
    nodes.push_back(e.a);
    nodes.push_back(e.b);
  }
  return make(std::move(nodes), std::move(edges));
}

bool graph::has_node(const node_id& v) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), v);
}

bool graph::has_edge(const node_id& x, const node_id& y) const {
  if (x == y) return false;
  const edge e = x < y ? edge{x, y} : edge{y, x};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::size_t graph::degree(const node_id& v) const {
  std::size_t d = 0;
  for (const edge& e : edges_) d += (e.a == v || e.b == v) ? 1 : 0;
  return d;
}

std::vector<node_id> graph::neighbors(const node_id& v) const {
  if (!has_node(v)) throw unknown_node("no node '" + v + "'");
  std::vector<node_id> out;
  for (const edge& e : edges_) {
    if (e.a == v) out.push_back(e.b);
    if (e.b == v) out.push_back(e.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

graph graph::remove_links(std::span<const edge> links) const {
  std::set<edge> gone;
  for (const edge& e : links) {
    if (!has_edge(e.a, e.b)) {
      throw unknown_edge("no edge " + e.a + " " + e.b);
    }
    gone.insert(e);
  }
  std::vector<edge> kept;
  kept.reserve(edges_.size());
  for (const edge& e : edges_) {
    if (!gone.contains(e)) kept.push_back(e);
  }
  return make(nodes_, std::move(kept));
}

graph graph::add_links(std::span<const edge> links) const {
  std::vector<edge> merged = edges_;
  for (const edge& e : links) {
    if (!has_node(e.a) || !has_node(e.b)) {
      throw unknown_endpoint("edge " + e.a + " " + e.b +
                             " has an endpoint outside the graph");
    }
    if (has_edge(e.a, e.b)) {
      throw duplicate_edge("edge " + e.a + " " + e.b + " already present");
    }
    merged.push_back(e);
  }
  return make(nodes_, std::move(merged));
}

graph graph::subtract_subgraphs(std::span<const subgraph_ref> parts) const {
  std::set<node_id> part_nodes;
  std::set<edge> removed;
  for (const subgraph_ref& part : parts) {
    std::set<node_id> own(part.nodes.begin(), part.nodes.end());
    for (const node_id& v : part.nodes) {
      if (!has_node(v)) {
        throw not_a_subgraph("part node '" + v + "' not in the graph");
      }
    }
    for (const edge& e : part.edges) {
      if (!has_edge(e.a, e.b)) {
        throw not_a_subgraph("part edge " + e.a + " " + e.b +
                             " not in the graph");
      }
      if (!own.contains(e.a) || !own.contains(e.b)) {
        throw not_a_subgraph("part edge " + e.a + " " + e.b +
                             " leaves the part's node set");
      }
    }
    part_nodes.insert(part.nodes.begin(), part.nodes.end());
    removed.insert(part.edges.begin(), part.edges.end());
  }

  std::vector<edge> kept;
  kept.reserve(edges_.size());
  for (const edge& e : edges_) {
    if (!removed.contains(e)) kept.push_back(e);
  }
  std::map<node_id, std::size_t> deg;
  for (const edge& e : kept) {
    ++deg[e.a];
    ++deg[e.b];
  }
  std::vector<node_id> survivors;
  for (const node_id& v : nodes_) {
    if (part_nodes.contains(v) && deg[v] == 0) continue;
    survivors.push_back(v);
  }
  return make(std::move(survivors), std::move(kept));
}

graph graph_union(const graph& g, const graph& h) {
  std::vector<node_id> nodes = g.nodes();
  nodes.insert(nodes.end(), h.nodes().begin(), h.nodes().end());
  std::vector<edge> edges = g.edges();
  for (const edge& e : h.edges()) {
    if (!g.has_edge(e.a, e.b)) edges.push_back(e);
  }
  return graph::make(std::move(nodes), std::move(edges));
}

namespace {

/// Index of each node's component, by repeated sweeps from unvisited nodes.
std::map<node_id, int> component_index(const graph& g) {
  std::map<node_id, std::vector<node_id>> adj;
  for (const node_id& v : g.nodes()) adj[v];
  for (const edge& e : g.edges()) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::map<node_id, int> comp;
  int next = 0;
  for (const node_id& start : g.nodes()) {
    if (comp.contains(start)) continue;
    std::vector<node_id> stack{start};
    comp[start] = next;
    while (!stack.empty()) {
      node_id v = stack.back();
      stack.pop_back();
      for (const node_id& w : adj[v]) {
        if (!comp.contains(w)) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

}  // namespace

bool is_connected(const graph& g) {
  if (g.node_count() <= 1) return true;
  const auto comp = component_index(g);
  for (const auto& [v, c] : comp) {
    if (c != 0) return false;
  }
  return true;
}

std::vector<graph> connected_components(const graph& g) {
  const auto comp = component_index(g);
  int count = 0;
  for (const auto& [v, c] : comp) count = std::max(count, c + 1);
  std::vector<std::vector<node_id>> nodes(count);
  std::vector<std::vector<edge>> edges(count);
  for (const node_id& v : g.nodes()) nodes[comp.at(v)].push_back(v);
  for (const edge& e : g.edges()) edges[comp.at(e.a)].push_back(e);
  std::vector<graph> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    out.push_back(graph::make(std::move(nodes[i]), std::move(edges[i])));
  }
  return out;
}

std::pair<graph, monitor_set> attach_external_monitors(
    const graph& g, std::span<const node_id> attach) {
  for (const node_id& v : attach) {
    if (!g.has_node(v)) throw unknown_node("no attach node '" + v + "'");
  }
  std::vector<node_id> nodes = g.nodes();
  std::vector<edge> edges = g.edges();
  monitor_set monitors;
  std::set<node_id> taken(nodes.begin(), nodes.end());
  std::size_t serial = 0;
  for (const node_id& v : attach) {
    node_id name;
    do {
      name = "m" + std::to_string(++serial);
    } while (taken.contains(name));
    taken.insert(name);
    nodes.push_back(name);
    edges.push_back(edge::make(name, v));
    monitors.nodes.push_back(name);
  }
  std::sort(monitors.nodes.begin(), monitors.nodes.end());
  return {graph::make(std::move(nodes), std::move(edges)), std::move(monitors)};
}

}  // namespace failoc
