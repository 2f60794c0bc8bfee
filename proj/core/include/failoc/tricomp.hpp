#pragma once

#include <vector>

#include "failoc/decompose.hpp"
#include "failoc/graph.hpp"

namespace failoc {

/// One component of the canonical triconnected decomposition of a block.
/// Real edges are edges of the original graph; each virtual edge marks the
/// separation pair along which this component was split from exactly one
/// other component carrying a matching copy (same pair_id).
struct tri_component {
  enum class kind_t {
    bond,          // two nodes, parallel edges
    polygon,       // a cycle of length >= 3
    triconnected,  // a simple 3-connected multigraph leaf
  };

  struct virtual_edge {
    node_id a;    // normalized a < b
    node_id b;
    int pair_id;  // shared by exactly two components

    friend bool operator==(const virtual_edge&, const virtual_edge&) = default;
    friend auto operator<=>(const virtual_edge&, const virtual_edge&) = default;
  };

  kind_t kind = kind_t::bond;
  std::vector<node_id> nodes;            // sorted
  std::vector<edge> real_edges;          // sorted
  std::vector<virtual_edge> virtual_edges;  // sorted

  std::size_t size() const { return real_edges.size() + virtual_edges.size(); }
};

/// Canonical (Tutte) triconnected decomposition of one biconnected block:
/// repeated splitting at separation pairs followed by merging of adjacent
/// same-kind bond/polygon components, so no two bonds and no two polygons
/// share a virtual edge. A single-edge block yields one trivial bond; a
/// cycle yields one polygon; a 3-connected block yields one leaf.
/// Components are ordered deterministically. Throws not_biconnected if
/// the block nodes/edges do not form a biconnected unit.
std::vector<tri_component> triconnected_components(const block& b);

}  // namespace failoc
