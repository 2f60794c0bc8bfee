#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "failoc/graph.hpp"

namespace failoc {

enum class placement_algorithm { polygonless, biconnected, omp_csp };

/// One audit record. Monitor-placing rules carry the candidate list the
/// seeded choice was drawn from and the chosen node; peel records carry
/// the removed structure. Replaying the chosen nodes of placing rules
/// reproduces the monitor set exactly.
struct trace_step {
  std::string rule;
  std::vector<std::string> candidates;
  std::string chosen;
  std::vector<std::string> removed;
};

struct placement_result {
  placement_algorithm algorithm = placement_algorithm::omp_csp;
  std::uint64_t seed = 0;
  monitor_set monitors;
  std::vector<trace_step> trace;
};

/// Rule strings that place a monitor; all other rules are audit-only.
bool is_placing_rule(const std::string& rule);

/// Monitors named by placing rules of a trace, sorted and deduplicated.
std::vector<node_id> replay_monitors(const std::vector<trace_step>& trace);

/// Monitor placement for graphs whose blocks are all polygon-less
/// components (tandem collections). `avoid` lists nodes the non-bond rule
/// must not select (the agents / cut vertices of the enclosing call).
/// Accepts disconnected and edgeless input. Throws polygon_present if some
/// block is not a plc, no_eligible_node if the non-bond rule runs dry.
placement_result monitors_in_polygonless(const graph& g,
                                         const std::vector<node_id>& avoid,
                                         std::uint64_t seed);

/// Monitor placement for a 2-connected graph (>= 3 nodes, no cut vertex).
/// Throws not_two_connected otherwise.
placement_result monitors_in_biconnected(const graph& g, std::uint64_t seed);

/// Full placement for any connected graph: both nodes of a trivial graph,
/// the 2-connected procedure, or the per-block peel followed by the global
/// peel. Throws disconnected_graph.
placement_result omp_csp(const graph& g, std::uint64_t seed);

}  // namespace failoc
