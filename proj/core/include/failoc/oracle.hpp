#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "failoc/graph.hpp"

namespace failoc {

/// Size guards for the exact oracle. Both are enforced by every oracle
/// entry point; callers working on larger instances raise them explicitly.
struct oracle_limits {
  std::size_t max_nodes = 12;
  std::size_t max_paths = 100000;
};

struct path_options {
  /// When false, measurement paths may not pass through a monitor as an
  /// interior node (strict mode).
  bool monitors_as_interior = true;
};

/// One measurement path: a simple path between two distinct monitors,
/// written from its lexicographically smaller endpoint.
struct measurement_path {
  std::vector<node_id> nodes;

  friend bool operator==(const measurement_path&, const measurement_path&) = default;
};

/// All measurement paths of every unordered monitor pair, in deterministic
/// order: pairs by (smaller, larger) endpoint, paths per pair in
/// lexicographic node-sequence order. Path ids are positions in this list.
/// Fewer than two monitors yield no paths. Throws unknown_node for a
/// monitor outside g, cap_exceeded past the limits.
std::vector<measurement_path> enumerate_monitor_paths(
    const graph& g, const monitor_set& monitors,
    const oracle_limits& limits = {}, const path_options& options = {});

/// Path-id signature of every non-monitor node: the set of measurement
/// paths passing through it. Nodes with empty signatures are present with
/// empty vectors.
std::map<node_id, std::vector<int>> path_signature(
    const graph& g, const monitor_set& monitors,
    const oracle_limits& limits = {}, const path_options& options = {});

/// True when the signatures of two distinct non-monitor nodes differ.
/// Throws not_non_monitor if either node is a monitor or absent, same_node
/// if u == w.
bool distinguishable(const graph& g, const monitor_set& monitors,
                     const node_id& u, const node_id& w,
                     const oracle_limits& limits = {},
                     const path_options& options = {});

/// Verdict plus evidence: uncovered non-monitors and confusable pairs.
struct identifiability_report {
  bool identifiable = false;
  std::vector<node_id> uncovered;                          // sorted
  std::vector<std::pair<node_id, node_id>> confusable_pairs;  // sorted pairs
};

/// A single failed node is localizable iff every non-monitor is covered by
/// some measurement path and no two non-monitors share a signature.
/// Vacuously true when every node is a monitor.
identifiability_report is_one_identifiable(
    const graph& g, const monitor_set& monitors,
    const oracle_limits& limits = {}, const path_options& options = {});

struct min_monitors_result {
  std::size_t k = 0;
  monitor_set witness;  // lexicographically first feasible set of size k
};

/// Exact minimum monitor count by subset scan in size-then-lexicographic
/// order. Throws cap_exceeded when g exceeds the limits.
min_monitors_result min_monitors_bruteforce(const graph& g,
                                            const oracle_limits& limits = {},
                                            const path_options& options = {});

}  // namespace failoc
