#pragma once

#include <stdexcept>
#include <string>

namespace failoc {

/// Base class for all failoc errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Edge-list input repeats an unordered node pair.
struct duplicate_edge : error { using error::error; };

/// Edge-list input contains an edge from a node to itself.
struct self_loop : error { using error::error; };

/// Edge-list line is not two whitespace-separated tokens.
struct malformed_line : error { using error::error; };

/// An edge scheduled for removal does not exist in the graph.
struct unknown_edge : error { using error::error; };

/// An edge to insert refers to a node outside the graph.
struct unknown_endpoint : error { using error::error; };

/// A referenced node does not exist in the graph.
struct unknown_node : error { using error::error; };

/// A subgraph reference is not contained in its parent graph.
struct not_a_subgraph : error { using error::error; };

/// Requested edge count is outside [n-1, n(n-1)/2].
struct infeasible_edge_count : error { using error::error; };

/// Operation requires a connected graph.
struct disconnected_graph : error { using error::error; };

/// Operation requires a biconnected (single-block) graph.
struct not_biconnected : error { using error::error; };

/// Operation requires a 2-connected graph (>= 3 nodes, no cut vertex).
struct not_two_connected : error { using error::error; };

/// Placement precondition violated: some block is not polygon-free.
struct polygon_present : error { using error::error; };

/// A placement rule found no node eligible for selection.
struct no_eligible_node : error { using error::error; };

/// The exact oracle refused input beyond its size or path caps.
struct cap_exceeded : error { using error::error; };

/// A distinguishability query named a monitor or a node outside the graph.
struct not_non_monitor : error { using error::error; };

/// A distinguishability query named the same node twice.
struct same_node : error { using error::error; };

}  // namespace failoc
