#pragma once

#include <vector>

#include "failoc/graph.hpp"

namespace failoc {

/// Nodes whose removal increases the number of connected components.
/// Works per component for disconnected input. Sorted.
std::vector<node_id> cut_vertices(const graph& g);

/// One biconnected component: a maximal subgraph without a cut vertex of
/// its own, or a bridge edge, or an isolated node. Ids are positions in
/// the deterministic block order of the owning graph.
struct block {
  int id = 0;
  std::vector<node_id> nodes;         // sorted
  std::vector<edge> edges;            // sorted
  std::vector<node_id> cut_vertices;  // cut vertices of g lying in this block
  bool is_bond = false;               // exactly one edge

  subgraph_ref as_subgraph() const { return subgraph_ref{nodes, edges}; }
};

/// Biconnected components of g, edge-disjoint and covering every edge.
/// Isolated nodes form single-node blocks. Blocks are ordered by their
/// sorted node lists, ids set accordingly.
std::vector<block> biconnected_components(const graph& g);

/// Bipartite tree over blocks and cut vertices of a connected graph.
struct block_cut_tree_t {
  std::vector<block> blocks;
  std::vector<node_id> cuts;                  // sorted
  std::vector<std::pair<int, int>> links;     // (block id, index into cuts)

  /// Ids of blocks containing the given cut index.
  std::vector<int> blocks_of_cut(int cut_index) const;
  /// Cut indices inside the given block.
  std::vector<int> cuts_of_block(int block_id) const;
  /// Ids of blocks sharing a cut vertex with the given block.
  std::vector<int> neighbor_blocks(int block_id) const;
};

/// Block-cut tree of a connected graph. Throws disconnected_graph.
block_cut_tree_t block_cut_tree(const graph& g);

}  // namespace failoc
