#include "failoc/decompose.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "failoc/errors.hpp"
#include "indexed.hpp"

namespace failoc {

namespace {

/// Hopcroft-Tarjan lowpoint pass. Emits edge groups (one per biconnected
/// component) and articulation points.
struct block_finder {
  const detail::indexed_view& view;
  std::vector<int> depth, low;
  std::vector<bool> cut;
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<std::vector<std::pair<int, int>>> groups;

  explicit block_finder(const detail::indexed_view& v)
      : view(v), depth(v.size(), -1), low(v.size(), 0), cut(v.size(), false) {}

  void run() {
    for (int v = 0; v < view.size(); ++v) {
      if (depth[v] == -1) dfs(v);
    }
  }

  void dfs(int root) {
    // Explicit stack: (node, parent, next neighbor position).
    struct frame {
      int v, parent;
      std::size_t next = 0;
      int children = 0;
    };
    std::vector<frame> stack{{root, -1}};
    depth[root] = 0;
    low[root] = 0;
    while (!stack.empty()) {
      frame& f = stack.back();
      if (f.next < view.adj[f.v].size()) {
        const int w = view.adj[f.v][f.next++];
        if (w == f.parent) continue;
        if (depth[w] == -1) {
          edge_stack.emplace_back(f.v, w);
          depth[w] = depth[f.v] + 1;
          low[w] = depth[w];
          ++f.children;
          stack.push_back(frame{w, f.v});
        } else if (depth[w] < depth[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], depth[w]);
        }
      } else {
        const frame done = f;
        stack.pop_back();
        if (stack.empty()) {
          if (done.children >= 2) cut[done.v] = true;
          continue;
        }
        frame& p = stack.back();
        low[p.v] = std::min(low[p.v], low[done.v]);
        if (low[done.v] >= depth[p.v]) {
          // p.v closes a biconnected component: everything pushed since
          // the tree edge (p.v, done.v) belongs to it.
          if (p.parent != -1) cut[p.v] = true;
          std::vector<std::pair<int, int>> group;
          while (true) {
            const auto e = edge_stack.back();
            edge_stack.pop_back();
            group.push_back(e);
            if (e.first == p.v && e.second == done.v) break;
          }
          groups.push_back(std::move(group));
        }
      }
    }
  }
};

}  // namespace

std::vector<node_id> cut_vertices(const graph& g) {
  const auto view = detail::indexed_view::of(g);
  block_finder finder(view);
  finder.run();
  std::vector<node_id> out;
  for (int v = 0; v < view.size(); ++v) {
    if (finder.cut[v]) out.push_back(view.ids[v]);
  }
  return out;
}

std::vector<block> biconnected_components(const graph& g) {
  const auto view = detail::indexed_view::of(g);
  block_finder finder(view);
  finder.run();

  std::vector<block> blocks;
  for (const auto& group : finder.groups) {
    block b;
    std::set<node_id> nodes;
    for (const auto& [x, y] : group) {
      b.edges.push_back(edge::make(view.ids[x], view.ids[y]));
      nodes.insert(view.ids[x]);
      nodes.insert(view.ids[y]);
    }
    b.nodes.assign(nodes.begin(), nodes.end());
    std::sort(b.edges.begin(), b.edges.end());
    b.is_bond = b.edges.size() == 1;
    blocks.push_back(std::move(b));
  }
  // Isolated nodes form their own single-node blocks.
  for (const node_id& v : g.nodes()) {
    if (g.degree(v) == 0) {
      block b;
      b.nodes = {v};
      blocks.push_back(std::move(b));
    }
  }
  std::sort(blocks.begin(), blocks.end(), [](const block& x, const block& y) {
    return x.nodes != y.nodes ? x.nodes < y.nodes : x.edges < y.edges;
  });

  std::set<node_id> cuts;
  for (int v = 0; v < view.size(); ++v) {
    if (finder.cut[v]) cuts.insert(view.ids[v]);
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    blocks[i].id = static_cast<int>(i);
    for (const node_id& v : blocks[i].nodes) {
      if (cuts.contains(v)) blocks[i].cut_vertices.push_back(v);
    }
  }
  return blocks;
}

std::vector<int> block_cut_tree_t::blocks_of_cut(int cut_index) const {
  std::vector<int> out;
  for (const auto& [b, c] : links) {
    if (c == cut_index) out.push_back(b);
  }
  return out;
}

std::vector<int> block_cut_tree_t::cuts_of_block(int block_id) const {
  std::vector<int> out;
  for (const auto& [b, c] : links) {
    if (b == block_id) out.push_back(c);
  }
  return out;
}

std::vector<int> block_cut_tree_t::neighbor_blocks(int block_id) const {
  std::set<int> out;
  for (const int c : cuts_of_block(block_id)) {
    for (const int b : blocks_of_cut(c)) {
      if (b != block_id) out.insert(b);
    }
  }
  return {out.begin(), out.end()};
}

block_cut_tree_t block_cut_tree(const graph& g) {
  if (!is_connected(g)) {
    throw disconnected_graph("block-cut tree requires a connected graph");
  }
  block_cut_tree_t tree;
  tree.blocks = biconnected_components(g);
  std::set<node_id> cuts;
  for (const block& b : tree.blocks) {
    cuts.insert(b.cut_vertices.begin(), b.cut_vertices.end());
  }
  tree.cuts.assign(cuts.begin(), cuts.end());
  for (const block& b : tree.blocks) {
    for (const node_id& v : b.cut_vertices) {
      const int ci = static_cast<int>(
          std::lower_bound(tree.cuts.begin(), tree.cuts.end(), v) -
          tree.cuts.begin());
      tree.links.emplace_back(b.id, ci);
    }
  }
  return tree;
}

}  // namespace failoc
