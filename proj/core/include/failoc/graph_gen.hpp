#pragma once

#include <cstdint>

#include "failoc/graph.hpp"

namespace failoc {

/// Uniformly seeded connected graph on `n` nodes and `m` edges. Node
/// identifiers are decimal strings "1".."n", zero-padded to equal width so
/// lexicographic and numeric order agree. A random spanning tree is drawn
/// first, then the remaining edges are sampled without replacement.
/// Deterministic for fixed (n, m, seed). Throws infeasible_edge_count
/// unless n >= 1 and n-1 <= m <= n(n-1)/2.
graph random_connected_graph(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace failoc
