#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace failoc {

/// Node identifier: an opaque token, ordered lexicographically.
using node_id = std::string;

/// Undirected simple edge. Endpoints are kept normalized (a < b) so that
/// an unordered pair has exactly one representation.
struct edge {
  node_id a;
  node_id b;

  /// Normalizing constructor helper; throws self_loop on x == y.
  static edge make(node_id x, node_id y);

  friend bool operator==(const edge&, const edge&) = default;
  friend auto operator<=>(const edge&, const edge&) = default;
};

/// Node and edge subsets of a parent graph, used as the operand of
/// subtract_subgraphs. Edge endpoints must lie inside `nodes`.
struct subgraph_ref {
  std::vector<node_id> nodes;
  std::vector<edge> edges;
};

/// A set of monitor locations, kept sorted and unique.
struct monitor_set {
  std::vector<node_id> nodes;

  bool contains(const node_id& v) const;
  friend bool operator==(const monitor_set&, const monitor_set&) = default;
};

/// Immutable undirected simple graph over string-identified nodes.
/// Nodes and edges are stored sorted, so iteration order, serialization,
/// and every algorithm built on top are deterministic.
class graph {
 public:
  graph() = default;

  /// Builds from explicit node and edge lists. Nodes not mentioned by any
  /// edge are kept as isolated nodes. Throws unknown_endpoint if an edge
  /// endpoint is missing from `nodes`, duplicate_edge on repeats.
  static graph make(std::vector<node_id> nodes, std::vector<edge> edges);

  /// Builds from edges alone; the node set is the set of endpoints.
  static graph from_edges(std::vector<edge> edges);

  const std::vector<node_id>& nodes() const { return nodes_; }
  const std::vector<edge>& edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_node(const node_id& v) const;
  bool has_edge(const node_id& x, const node_id& y) const;
  std::size_t degree(const node_id& v) const;

  /// Sorted list of nodes adjacent to v. Throws unknown_node.
  std::vector<node_id> neighbors(const node_id& v) const;

  /// Removes the given edges, keeping all nodes. Throws unknown_edge if an
  /// edge is absent.
  graph remove_links(std::span<const edge> links) const;

  /// Inserts edges between existing nodes. Throws unknown_endpoint if an
  /// endpoint is absent, duplicate_edge if an edge already exists.
  graph add_links(std::span<const edge> links) const;

  /// Deletes each part's edges, then deletes exactly those nodes that
  /// belong to some part and are left isolated. Nodes outside every part
  /// are always retained, even when isolated. Throws not_a_subgraph if a
  /// part is not contained in this graph.
  graph subtract_subgraphs(std::span<const subgraph_ref> parts) const;

  friend bool operator==(const graph&, const graph&) = default;

 private:
  std::vector<node_id> nodes_;  // sorted, unique
  std::vector<edge> edges_;     // normalized, sorted, unique
};

/// Union of node and edge sets.
graph graph_union(const graph& g, const graph& h);

/// True when every node is reachable from every other. The empty graph
/// counts as connected.
bool is_connected(const graph& g);

/// Connected components, ordered by their smallest node identifier.
std::vector<graph> connected_components(const graph& g);

/// Adds one fresh degree-1 monitor node per entry of `attach` (monitor
/// names m1, m2, ... as available) and returns the grown graph together
/// with the new monitor set. Throws unknown_node for a bad attach point.
std::pair<graph, monitor_set> attach_external_monitors(
    const graph& g, std::span<const node_id> attach);

}  // namespace failoc
