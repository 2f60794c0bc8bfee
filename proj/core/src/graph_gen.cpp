#include "failoc/graph_gen.hpp"

#include <algorithm>
#include <string>

#include "failoc/errors.hpp"
#include "failoc/rng.hpp"

namespace failoc {

graph random_connected_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 1) throw infeasible_edge_count("need at least one node");
  const std::size_t max_edges = n * (n - 1) / 2;
  if (m + 1 < n || m > max_edges) {
    throw infeasible_edge_count("no connected graph on " + std::to_string(n) +
                                " nodes with " + std::to_string(m) + " edges");
  }

  const std::size_t width = std::to_string(n).size();
  std::vector<node_id> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string s = std::to_string(i + 1);
    names[i] = std::string(width - s.size(), '0') + s;
  }

  rng r(seed);
  std::vector<edge> edges;
  edges.reserve(m);
  // Random spanning tree: each node joins an earlier one.
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t j = static_cast<std::size_t>(r.below(i));
    edges.push_back(edge::make(names[i], names[j]));
  }
  std::sort(edges.begin(), edges.end());

  std::vector<edge> pool;  // non-tree candidate edges, in identifier order
  pool.reserve(max_edges - (n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edge e = edge::make(names[i], names[j]);
      if (!std::binary_search(edges.begin(), edges.end(), e)) {
        pool.push_back(std::move(e));
      }
    }
  }
  // Partial Fisher-Yates: draw the extra edges without replacement.
  const std::size_t extra = m - (n - 1);
  for (std::size_t i = 0; i < extra; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(r.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
    edges.push_back(pool[i]);
  }

  return graph::make(std::move(names), std::move(edges));
}

}  // namespace failoc
