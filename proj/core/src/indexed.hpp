#pragma once

#include <algorithm>
#include <vector>

#include "failoc/graph.hpp"

namespace failoc::detail {

/// Integer-indexed adjacency view of a graph; index order equals the
/// sorted node order, so index-based iteration stays deterministic.
struct indexed_view {
  std::vector<node_id> ids;                    // position -> identifier
  std::vector<std::pair<int, int>> edges;      // index pairs, first < second
  std::vector<std::vector<int>> adj;           // sorted neighbor indices

  static indexed_view of(const graph& g) {
    indexed_view v;
    v.ids = g.nodes();
    v.adj.resize(v.ids.size());
    v.edges.reserve(g.edge_count());
    for (const edge& e : g.edges()) {
      const int a = v.index_of(e.a);
      const int b = v.index_of(e.b);
      v.edges.emplace_back(a, b);
      v.adj[a].push_back(b);
      v.adj[b].push_back(a);
    }
    for (auto& row : v.adj) std::sort(row.begin(), row.end());
    return v;
  }

  int index_of(const node_id& v) const {
    return static_cast<int>(
        std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  }

  int size() const { return static_cast<int>(ids.size()); }
};

}  // namespace failoc::detail
