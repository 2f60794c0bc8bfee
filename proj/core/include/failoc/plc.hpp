#pragma once

#include <map>
#include <vector>

#include "failoc/decompose.hpp"
#include "failoc/graph.hpp"

namespace failoc {

/// Polygon-less component of a block. Long polygons (cycle components of
/// length >= 4) act as separators: each of their real edges becomes a bond
/// plc of its own, while maximal groups of the remaining components glued
/// along shared virtual edges become one plc each. Ids are positions in
/// the deterministic plc order of the owning graph.
struct plc {
  int id = 0;
  int parent_block = 0;
  std::vector<node_id> nodes;   // sorted endpoints of the plc's edges
  std::vector<edge> edges;      // sorted
  std::vector<node_id> agents;  // filled by plc_agents; sorted
  bool is_bond = false;         // exactly one edge

  subgraph_ref as_subgraph() const { return subgraph_ref{nodes, edges}; }
};

/// Polygon-less components of one block, ordered by edge lists; ids are
/// local positions until reassigned by decompose().
std::vector<plc> plc_decompose(const block& b);

/// True when the block decomposes into exactly one plc covering it.
bool block_is_plc(const block& b);

/// Fills each plc's agent list: nodes shared with any other plc of the
/// graph plus cut vertices of g lying in the plc. Takes the full plc list
/// of g so cross-block sharing is visible.
std::vector<plc> plc_agents(std::vector<plc> plcs, const graph& g);

/// Neighbor map over plc ids; two plcs are neighbors when they share at
/// least one node.
std::map<int, std::vector<int>> plc_neighbors(const std::vector<plc>& plcs);

/// Neighbor map restricted to plcs of one block.
std::map<int, std::vector<int>> plc_neighbors_within_block(
    const std::vector<plc>& plcs, int block_id);

/// Blocks plus agent-annotated plcs of a graph, with global ids assigned
/// in deterministic order.
struct decomposition {
  std::vector<block> blocks;
  std::vector<plc> plcs;
};

decomposition decompose(const graph& g);

}  // namespace failoc
