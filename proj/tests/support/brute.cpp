#include "support/brute.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace brute {

using failoc::edge;
using failoc::graph;
using failoc::node_id;

std::vector<node_id> letter_nodes(int n) {
  std::vector<node_id> nodes;
  for (int i = 0; i < n; ++i) nodes.push_back(std::string(1, char('a' + i)));
  return nodes;
}

namespace {

int component_count(const graph& g) {
  return static_cast<int>(connected_components(g).size());
}

graph without_node(const graph& g, const node_id& v) {
  std::vector<node_id> nodes;
  for (const node_id& u : g.nodes()) {
    if (u != v) nodes.push_back(u);
  }
  std::vector<edge> edges;
  for (const edge& e : g.edges()) {
    if (e.a != v && e.b != v) edges.push_back(e);
  }
  return graph::make(nodes, edges);
}

/// All simple cycles, each as its sorted edge set, by DFS from every edge.
std::vector<std::vector<edge>> simple_cycles(const graph& g) {
  std::set<std::vector<edge>> cycles;
  std::vector<node_id> path;
  std::set<node_id> on_path;

  std::function<void(const node_id&, const node_id&)> walk =
      [&](const node_id& start, const node_id& v) {
        for (const node_id& w : g.neighbors(v)) {
          if (w == start && path.size() >= 3) {
            std::vector<edge> cyc;
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
              cyc.push_back(edge::make(path[i], path[i + 1]));
            }
            cyc.push_back(edge::make(path.back(), start));
            std::sort(cyc.begin(), cyc.end());
            cycles.insert(cyc);
          } else if (!on_path.contains(w) && w > start) {
            path.push_back(w);
            on_path.insert(w);
            walk(start, w);
            on_path.erase(w);
            path.pop_back();
          }
        }
      };

  for (const node_id& start : g.nodes()) {
    path = {start};
    on_path = {start};
    walk(start, start);
  }
  return {cycles.begin(), cycles.end()};
}

}  // namespace

void for_each_connected_graph(int n,
                              const std::function<void(const graph&)>& fn) {
  const std::vector<node_id> nodes = letter_nodes(n);
  std::vector<edge> all;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) all.push_back(edge::make(nodes[i], nodes[j]));
  }
  const std::size_t m = all.size();
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    std::vector<edge> edges;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1ull << i)) edges.push_back(all[i]);
    }
    const graph g = graph::make(nodes, edges);
    if (is_connected(g)) fn(g);
  }
}

std::vector<node_id> cut_vertices(const graph& g) {
  std::vector<node_id> cuts;
  const int before = component_count(g);
  for (const node_id& v : g.nodes()) {
    // A non-cut node leaves the count unchanged (or drops it by one when
    // the node was isolated); a cut vertex raises it.
    if (component_count(without_node(g, v)) > before) cuts.push_back(v);
  }
  return cuts;
}

bool edges_share_cycle(const graph& g, const edge& e1, const edge& e2) {
  for (const auto& cyc : simple_cycles(g)) {
    if (std::binary_search(cyc.begin(), cyc.end(), e1) &&
        std::binary_search(cyc.begin(), cyc.end(), e2)) {
      return true;
    }
  }
  return false;
}

std::vector<std::vector<edge>> block_edge_partition(const graph& g) {
  const std::vector<edge>& edges = g.edges();
  std::vector<std::size_t> parent(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (const auto& cyc : simple_cycles(g)) {
    std::size_t first = edges.size();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!std::binary_search(cyc.begin(), cyc.end(), edges[i])) continue;
      if (first == edges.size()) {
        first = i;
      } else {
        parent[find(i)] = find(first);
      }
    }
  }

  std::map<std::size_t, std::vector<edge>> classes;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    classes[find(i)].push_back(edges[i]);
  }
  std::vector<std::vector<edge>> out;
  for (auto& [root, members] : classes) {
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool exists_path_through(const graph& g, const node_id& m1, const node_id& m2,
                         const node_id& v) {
  bool found = false;
  std::set<node_id> on_path{m1};
  std::function<void(const node_id&)> walk = [&](const node_id& at) {
    if (found) return;
    if (at == m2) {
      found = on_path.contains(v) && v != m1 && v != m2;
      return;
    }
    for (const node_id& w : g.neighbors(at)) {
      if (on_path.contains(w)) continue;
      on_path.insert(w);
      walk(w);
      on_path.erase(w);
      if (found) return;
    }
  };
  walk(m1);
  return found;
}

}  // namespace brute
