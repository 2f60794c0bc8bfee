#include "failoc/tandem.hpp"

#include <algorithm>

#include "failoc/plc.hpp"

namespace failoc {

tandem_check is_tandem(const graph& g, const std::vector<node_id>& externals) {
  tandem_check out;
  if (!is_connected(g) || g.node_count() == 0) {
    out.rejection = "not-connected";
    return out;
  }
  const block_cut_tree_t tree = block_cut_tree(g);

  // Path shape: no cut vertex in three blocks, no block with three cuts.
  for (std::size_t c = 0; c < tree.cuts.size(); ++c) {
    if (tree.blocks_of_cut(static_cast<int>(c)).size() > 2) {
      out.rejection = "block-cut-tree-not-path";
      return out;
    }
  }
  for (const block& b : tree.blocks) {
    if (b.cut_vertices.size() > 2) {
      out.rejection = "block-cut-tree-not-path";
      return out;
    }
  }

  for (const block& b : tree.blocks) {
    if (b.edges.empty() || !block_is_plc(b)) {
      out.rejection = "block-not-plc";
      return out;
    }
  }

  // Walk the chain from a terminal block.
  std::vector<int> order;
  if (tree.blocks.size() == 1) {
    order = {0};
  } else {
    int start = -1;
    for (const block& b : tree.blocks) {
      if (tree.neighbor_blocks(b.id).size() == 1) {
        start = b.id;
        break;
      }
    }
    if (start == -1) {
      out.rejection = "block-cut-tree-not-path";
      return out;
    }
    std::vector<bool> seen(tree.blocks.size(), false);
    int at = start;
    while (true) {
      order.push_back(at);
      seen[static_cast<std::size_t>(at)] = true;
      int next = -1;
      for (const int nb : tree.neighbor_blocks(at)) {
        if (!seen[static_cast<std::size_t>(nb)]) {
          next = nb;
          break;
        }
      }
      if (next == -1) break;
      at = next;
    }
    if (order.size() != tree.blocks.size()) {
      out.rejection = "block-cut-tree-not-path";
      return out;
    }
  }

  // Externals: two distinct non-cut nodes, one per terminal block.
  auto in_block = [&](const node_id& v, int id) {
    const auto& nodes = tree.blocks[static_cast<std::size_t>(id)].nodes;
    return std::binary_search(nodes.begin(), nodes.end(), v);
  };
  auto is_cut = [&](const node_id& v) {
    return std::binary_search(tree.cuts.begin(), tree.cuts.end(), v);
  };
  if (externals.size() != 2 || externals[0] == externals[1] ||
      !g.has_node(externals[0]) || !g.has_node(externals[1]) ||
      is_cut(externals[0]) || is_cut(externals[1])) {
    out.rejection = "bad-externals";
    return out;
  }
  node_id v0 = externals[0];
  node_id vz = externals[1];
  const int first = order.front();
  const int last = order.back();
  if (order.size() == 1) {
    if (!in_block(v0, first) || !in_block(vz, first)) {
      out.rejection = "bad-externals";
      return out;
    }
  } else if (in_block(v0, first) && in_block(vz, last)) {
    // chain orientation already matches
  } else if (in_block(v0, last) && in_block(vz, first)) {
    std::reverse(order.begin(), order.end());
  } else {
    out.rejection = "bad-externals";
    return out;
  }

  tandem_instance inst;
  inst.g = g;
  for (const int id : order) {
    inst.chain.push_back(tree.blocks[static_cast<std::size_t>(id)]);
    inst.beta.push_back(
        static_cast<int>(tree.neighbor_blocks(id).size()));
  }
  inst.externals = {v0, vz};
  out.accepted = true;
  out.instance = std::move(inst);
  return out;
}

}  // namespace failoc
