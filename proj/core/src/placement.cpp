#include "failoc/placement.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>

#include "failoc/decompose.hpp"
#include "failoc/errors.hpp"
#include "failoc/plc.hpp"
#include "failoc/rng.hpp"

namespace failoc {

namespace {

std::vector<std::string> edge_strings(const std::vector<subgraph_ref>& parts) {
  std::set<std::string> out;
  for (const subgraph_ref& part : parts) {
    for (const edge& e : part.edges) out.insert(e.a + "-" + e.b);
  }
  return {out.begin(), out.end()};
}

graph block_graph(const block& b) { return graph::make(b.nodes, b.edges); }

std::vector<subgraph_ref> plc_parts(const std::vector<plc>& plcs,
                                    const std::set<int>& ids) {
  std::vector<subgraph_ref> parts;
  for (const plc& p : plcs) {
    if (ids.contains(p.id)) parts.push_back(p.as_subgraph());
  }
  return parts;
}

std::vector<std::string> plc_labels(const std::set<int>& ids) {
  std::vector<std::string> out;
  for (const int id : ids) out.push_back("plc" + std::to_string(id));
  return out;
}

std::vector<std::string> block_labels(const std::set<int>& ids) {
  std::vector<std::string> out;
  for (const int id : ids) out.push_back("block" + std::to_string(id));
  return out;
}

/// Monitor placement for tandem collections; recursion never rechecks the
/// polygon precondition because peeling preserves it by construction.
void polygonless_run(const graph& g, const std::vector<node_id>& avoid,
                     rng& r, std::set<node_id>& monitors,
                     std::vector<trace_step>& trace) {
  if (g.edge_count() == 0) return;
  for (const graph& comp : connected_components(g)) {
    if (comp.edge_count() == 0) continue;
    const auto blocks = biconnected_components(comp);
    if (blocks.size() == 1) {
      const std::vector<node_id>& candidates = comp.nodes();
      const node_id chosen = r.pick(candidates);
      trace.push_back({"polygonless/single-block", candidates, chosen, {}});
      monitors.insert(chosen);
      continue;
    }

    // Terminal block: fewest cut vertices wins, blocks are pre-sorted so
    // the first qualifying one has the least node list.
    const block* b1 = nullptr;
    for (const block& b : blocks) {
      if (b.cut_vertices.size() <= 1) {
        b1 = &b;
        break;
      }
    }
    const node_id join = b1->cut_vertices.front();
    const block* b2 = nullptr;
    for (const block& b : blocks) {
      if (b.id != b1->id &&
          std::binary_search(b.nodes.begin(), b.nodes.end(), join)) {
        b2 = &b;
        break;
      }
    }
    const block* b3 = nullptr;
    for (const block& b : blocks) {
      if (b.id == b1->id || b.id == b2->id) continue;
      std::vector<node_id> shared;
      std::set_intersection(b.nodes.begin(), b.nodes.end(), b2->nodes.begin(),
                            b2->nodes.end(), std::back_inserter(shared));
      if (!shared.empty()) {
        b3 = &b;
        break;
      }
    }

    std::vector<subgraph_ref> parts{b1->as_subgraph(), b2->as_subgraph()};
    if (b2->is_bond) {
      monitors.insert(join);
      trace.push_back(
          {"polygonless/bond-step", {join}, join, edge_strings(parts)});
    } else {
      std::vector<node_id> candidates;
      std::set_difference(b2->nodes.begin(), b2->nodes.end(), avoid.begin(),
                          avoid.end(), std::back_inserter(candidates));
      if (candidates.empty()) {
        throw no_eligible_node(
            "every node of the non-bond block is excluded");
      }
      const node_id chosen = r.pick(candidates);
      if (b3) parts.push_back(b3->as_subgraph());
      monitors.insert(chosen);
      trace.push_back({"polygonless/nonbond-step", candidates, chosen,
                       edge_strings(parts)});
    }
    polygonless_run(comp.subtract_subgraphs(parts), avoid, r, monitors, trace);
  }
}

/// Counts internally vertex-disjoint routes from start to distinct goal
/// nodes, stopping once limit routes exist. Goals only terminate routes;
/// unit vertex capacities keep the routes disjoint except at start.
int disjoint_goal_routes(const graph& g, const node_id& start,
                         const std::set<node_id>& goals, int limit) {
  std::map<node_id, int> index;
  for (const node_id& v : g.nodes()) {
    index.emplace(v, static_cast<int>(index.size()));
  }
  const int n = static_cast<int>(index.size());
  const int sink = 2 * n;
  const auto in = [](int i) { return 2 * i; };
  const auto out = [](int i) { return 2 * i + 1; };

  struct arc {
    int to;
    int cap;
  };
  std::vector<arc> arcs;
  std::vector<std::vector<int>> adj(2 * n + 1);
  const auto link = [&](int from, int to, int cap) {
    adj[from].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({to, cap});
    adj[to].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({from, 0});
  };

  for (const auto& [v, i] : index) {
    if (goals.contains(v)) {
      link(in(i), sink, 1);
    } else if (v != start) {
      link(in(i), out(i), 1);
    }
  }
  for (const edge& e : g.edges()) {
    const int a = index.at(e.a);
    const int b = index.at(e.b);
    link(out(a), in(b), 1);
    link(out(b), in(a), 1);
  }

  const int source = out(index.at(start));
  int routes = 0;
  std::vector<int> via(2 * n + 1);
  while (routes < limit) {
    std::fill(via.begin(), via.end(), -1);
    std::vector<int> queue{source};
    for (std::size_t head = 0; head < queue.size() && via[sink] < 0; ++head) {
      for (const int id : adj[queue[head]]) {
        if (arcs[id].cap > 0 && via[arcs[id].to] < 0 &&
            arcs[id].to != source) {
          via[arcs[id].to] = id;
          queue.push_back(arcs[id].to);
        }
      }
    }
    if (via[sink] < 0) break;
    for (int at = sink; at != source; at = arcs[via[at] ^ 1].to) {
      --arcs[via[at]].cap;
      ++arcs[via[at] ^ 1].cap;
    }
    ++routes;
  }
  return routes;
}

std::vector<node_id> all_agents(const std::vector<plc>& plcs) {
  std::set<node_id> out;
  for (const plc& p : plcs) out.insert(p.agents.begin(), p.agents.end());
  return {out.begin(), out.end()};
}

/// Plcs containing w, plus their neighbors when w is interior (non-agent).
std::set<int> reach_of(const std::vector<plc>& plcs,
                       const std::map<int, std::vector<int>>& neighbors,
                       const node_id& w) {
  std::set<int> holding;
  bool agent = false;
  for (const plc& p : plcs) {
    if (std::binary_search(p.nodes.begin(), p.nodes.end(), w)) {
      holding.insert(p.id);
      if (std::binary_search(p.agents.begin(), p.agents.end(), w)) {
        agent = true;
      }
    }
  }
  std::set<int> out = holding;
  if (!agent) {
    for (const int id : holding) {
      const auto& row = neighbors.at(id);
      out.insert(row.begin(), row.end());
    }
  }
  return out;
}

void biconnected_run(const graph& g, rng& r, std::set<node_id>& monitors,
                     std::vector<trace_step>& trace) {
  const decomposition d = decompose(g);
  const std::vector<node_id> s_a = all_agents(d.plcs);

  if (block_is_plc(d.blocks.front())) {
    std::vector<node_id> candidates = g.nodes();
    const node_id first = r.pick(candidates);
    trace.push_back({"biconnected/plc-pair", candidates, first, {}});
    candidates.erase(
        std::find(candidates.begin(), candidates.end(), first));
    const node_id second = r.pick(candidates);
    trace.push_back({"biconnected/plc-pair", candidates, second, {}});
    monitors.insert(first);
    monitors.insert(second);
    return;
  }

  const auto neighbors = plc_neighbors(d.plcs);

  std::set<int> hubs;
  for (const plc& p : d.plcs) {
    if (neighbors.at(p.id).size() >= 4) hubs.insert(p.id);
  }
  if (!hubs.empty()) {
    std::set<int> removal = hubs;
    for (const int id : hubs) {
      const auto& row = neighbors.at(id);
      removal.insert(row.begin(), row.end());
    }
    trace.push_back({"biconnected/set-A", plc_labels(hubs), "", {}});
    const auto parts = plc_parts(d.plcs, removal);
    trace.push_back({"biconnected/hub-peel", plc_labels(removal), "",
                     edge_strings(parts)});
    polygonless_run(g.subtract_subgraphs(parts), s_a, r, monitors, trace);
    return;
  }

  const bool any_bond =
      std::any_of(d.plcs.begin(), d.plcs.end(),
                  [](const plc& p) { return p.is_bond; });
  if (!any_bond) {
    std::vector<node_id> interior;
    for (const plc& p : d.plcs) {
      std::set_difference(p.nodes.begin(), p.nodes.end(), p.agents.begin(),
                          p.agents.end(), std::back_inserter(interior));
    }
    std::sort(interior.begin(), interior.end());
    std::string rule = "biconnected/interior-pick";
    if (interior.empty()) {
      // Degenerate: every node is an agent; fall back to agents.
      rule = "biconnected/interior-pick-agent-fallback";
      interior = g.nodes();
    }
    const node_id chosen = r.pick(interior);
    const auto removal = reach_of(d.plcs, neighbors, chosen);
    const auto parts = plc_parts(d.plcs, removal);
    monitors.insert(chosen);
    trace.push_back({rule, interior, chosen, edge_strings(parts)});
    polygonless_run(g.subtract_subgraphs(parts), s_a, r, monitors, trace);
    return;
  }

  // Bond trials: try a monitor next to each endpoint of a seeded bond and
  // keep the cheaper outcome.
  std::vector<int> bond_ids;
  for (const plc& p : d.plcs) {
    if (p.is_bond) bond_ids.push_back(p.id);
  }
  const int lambda = r.pick(bond_ids);
  const plc& bond = *std::find_if(d.plcs.begin(), d.plcs.end(),
                                  [&](const plc& p) { return p.id == lambda; });
  trace.push_back({"biconnected/bond-pick",
                   plc_labels(std::set<int>(bond_ids.begin(), bond_ids.end())),
                   "plc" + std::to_string(lambda),
                   {}});

  std::array<node_id, 2> w;
  std::array<std::vector<node_id>, 2> w_candidates;
  std::array<std::string, 2> w_rule;
  for (std::size_t i = 0; i < 2; ++i) {
    const node_id& v = bond.nodes[i];
    const plc* side = nullptr;
    for (const plc& p : d.plcs) {
      if (p.id != bond.id &&
          std::binary_search(p.nodes.begin(), p.nodes.end(), v)) {
        side = &p;
        break;
      }
    }
    if (side->is_bond) {
      w[i] = v;
      w_candidates[i] = {v};
      w_rule[i] = "biconnected/trial-monitor";
    } else {
      std::vector<node_id> interior;
      std::set_difference(side->nodes.begin(), side->nodes.end(),
                          side->agents.begin(), side->agents.end(),
                          std::back_inserter(interior));
      w_rule[i] = "biconnected/trial-monitor";
      if (interior.empty()) {
        w_rule[i] = "biconnected/trial-monitor-agent-fallback";
        interior = side->nodes;
      }
      w[i] = r.pick(interior);
      w_candidates[i] = std::move(interior);
    }
  }

  std::array<std::set<node_id>, 2> trial_monitors;
  std::array<std::vector<trace_step>, 2> trial_trace;
  for (std::size_t i = 0; i < 2; ++i) {
    rng child = r.fork(i + 1);
    const auto removal = reach_of(d.plcs, neighbors, w[i]);
    const auto parts = plc_parts(d.plcs, removal);
    trial_monitors[i].insert(w[i]);
    trial_trace[i].push_back(
        {w_rule[i], w_candidates[i], w[i], edge_strings(parts)});
    polygonless_run(g.subtract_subgraphs(parts), s_a, child,
                    trial_monitors[i], trial_trace[i]);
  }

  const std::size_t winner =
      trial_monitors[1].size() < trial_monitors[0].size() ? 1 : 0;
  trace.push_back({"biconnected/trial-select",
                   {"trial1:" + std::to_string(trial_monitors[0].size()),
                    "trial2:" + std::to_string(trial_monitors[1].size())},
                   winner == 0 ? "trial1" : "trial2",
                   {}});
  monitors.insert(trial_monitors[winner].begin(), trial_monitors[winner].end());
  trace.insert(trace.end(), trial_trace[winner].begin(),
               trial_trace[winner].end());
}

bool two_connected(const graph& g) {
  return g.node_count() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

}  // namespace

bool is_placing_rule(const std::string& rule) {
  static const std::set<std::string> placing{
      "omp/degenerate",
      "omp/leaf-plc",
      "polygonless/single-block",
      "polygonless/bond-step",
      "polygonless/nonbond-step",
      "biconnected/plc-pair",
      "biconnected/interior-pick",
      "biconnected/interior-pick-agent-fallback",
      "biconnected/trial-monitor",
      "biconnected/trial-monitor-agent-fallback",
  };
  return placing.contains(rule);
}

std::vector<node_id> replay_monitors(const std::vector<trace_step>& trace) {
  std::set<node_id> out;
  for (const trace_step& s : trace) {
    if (is_placing_rule(s.rule)) out.insert(s.chosen);
  }
  return {out.begin(), out.end()};
}

placement_result monitors_in_polygonless(const graph& g,
                                         const std::vector<node_id>& avoid,
                                         std::uint64_t seed) {
  for (const block& b : biconnected_components(g)) {
    if (!b.edges.empty() && !block_is_plc(b)) {
      throw polygon_present("block on node '" + b.nodes.front() +
                            "' contains a long polygon");
    }
  }
  std::vector<node_id> sorted_avoid = avoid;
  std::sort(sorted_avoid.begin(), sorted_avoid.end());

  placement_result result;
  result.algorithm = placement_algorithm::polygonless;
  result.seed = seed;
  rng r(seed);
  std::set<node_id> monitors;
  polygonless_run(g, sorted_avoid, r, monitors, result.trace);
  result.monitors.nodes.assign(monitors.begin(), monitors.end());
  return result;
}

placement_result monitors_in_biconnected(const graph& g, std::uint64_t seed) {
  if (!two_connected(g)) {
    throw not_two_connected("input is not 2-connected");
  }
  placement_result result;
  result.algorithm = placement_algorithm::biconnected;
  result.seed = seed;
  rng r(seed);
  std::set<node_id> monitors;
  biconnected_run(g, r, monitors, result.trace);
  result.monitors.nodes.assign(monitors.begin(), monitors.end());
  return result;
}

placement_result omp_csp(const graph& g, std::uint64_t seed) {
  if (!is_connected(g)) {
    throw disconnected_graph("placement requires a connected graph");
  }
  placement_result result;
  result.algorithm = placement_algorithm::omp_csp;
  result.seed = seed;
  rng r(seed);
  std::set<node_id> monitors;

  if (g.node_count() <= 2) {
    for (const node_id& v : g.nodes()) {
      result.trace.push_back({"omp/degenerate", {v}, v, {}});
      monitors.insert(v);
    }
    result.monitors.nodes.assign(monitors.begin(), monitors.end());
    return result;
  }

  if (two_connected(g)) {
    biconnected_run(g, r, monitors, result.trace);
    result.monitors.nodes.assign(monitors.begin(), monitors.end());
    return result;
  }

  const decomposition d = decompose(g);
  const std::vector<node_id> cuts = cut_vertices(g);

  for (const block& b : d.blocks) {
    if (b.edges.empty()) continue;
    const std::string tag = "omp/block" + std::to_string(b.id);

    if (block_is_plc(b) && b.cut_vertices.size() == 1) {
      std::vector<node_id> candidates;
      std::set_difference(b.nodes.begin(), b.nodes.end(),
                          b.cut_vertices.begin(), b.cut_vertices.end(),
                          std::back_inserter(candidates));
      const node_id chosen = r.pick(candidates);
      monitors.insert(chosen);
      result.trace.push_back({"omp/leaf-plc", candidates, chosen, {}});
      continue;
    }

    std::vector<plc> mine;
    for (const plc& p : d.plcs) {
      if (p.parent_block == b.id) mine.push_back(p);
    }
    const auto local_neighbors = plc_neighbors_within_block(d.plcs, b.id);

    std::set<int> set_a, set_c, set_e;
    for (const plc& p : mine) {
      if (p.agents.size() >= 3 || local_neighbors.at(p.id).size() >= 4) {
        set_a.insert(p.id);
      }
      if (p.agents.size() == 2 &&
          std::any_of(p.agents.begin(), p.agents.end(), [&](const node_id& v) {
            return std::binary_search(cuts.begin(), cuts.end(), v);
          })) {
        set_e.insert(p.id);
      }
    }
    for (const int id : set_a) {
      const auto& row = local_neighbors.at(id);
      set_c.insert(row.begin(), row.end());
    }
    result.trace.push_back({tag + "/set-A", plc_labels(set_a), "", {}});
    result.trace.push_back({tag + "/set-C", plc_labels(set_c), "", {}});
    result.trace.push_back({tag + "/set-E", plc_labels(set_e), "", {}});

    std::set<int> removal = set_a;
    removal.insert(set_c.begin(), set_c.end());
    removal.insert(set_e.begin(), set_e.end());
    const auto parts = plc_parts(d.plcs, removal);
    result.trace.push_back(
        {tag + "/peel", plc_labels(removal), "", edge_strings(parts)});
    polygonless_run(block_graph(b).subtract_subgraphs(parts),
                    all_agents(mine), r, monitors, result.trace);
  }

  // Global peel over whole blocks.
  std::map<int, std::set<int>> block_neighbors;
  for (const block& x : d.blocks) {
    for (const block& y : d.blocks) {
      if (x.id == y.id) continue;
      std::vector<node_id> shared;
      std::set_intersection(x.nodes.begin(), x.nodes.end(), y.nodes.begin(),
                            y.nodes.end(), std::back_inserter(shared));
      if (!shared.empty()) block_neighbors[x.id].insert(y.id);
    }
  }
  std::set<int> set_f, set_i, set_j, set_k;
  for (const block& b : d.blocks) {
    const bool has_monitor =
        std::any_of(b.nodes.begin(), b.nodes.end(),
                    [&](const node_id& v) { return monitors.contains(v); });
    if (has_monitor) set_f.insert(b.id);
    if (b.cut_vertices.size() == 2 && block_neighbors[b.id].size() >= 3) {
      set_i.insert(b.id);
    }
    if (b.cut_vertices.size() >= 3) set_j.insert(b.id);
  }
  for (const int id : set_j) {
    set_k.insert(block_neighbors[id].begin(), block_neighbors[id].end());
  }
  result.trace.push_back({"omp/set-F", block_labels(set_f), "", {}});
  result.trace.push_back({"omp/set-I", block_labels(set_i), "", {}});
  result.trace.push_back({"omp/set-J", block_labels(set_j), "", {}});
  result.trace.push_back({"omp/set-K", block_labels(set_k), "", {}});

  std::set<int> removal = set_f;
  removal.insert(set_i.begin(), set_i.end());
  removal.insert(set_j.begin(), set_j.end());
  removal.insert(set_k.begin(), set_k.end());
  std::vector<subgraph_ref> parts;
  for (const block& b : d.blocks) {
    if (removal.contains(b.id)) parts.push_back(b.as_subgraph());
  }
  result.trace.push_back(
      {"omp/global-peel", block_labels(removal), "", edge_strings(parts)});
  graph remainder = g.subtract_subgraphs(parts);

  // Each remainder component is a chain of blocks strung between cut
  // vertices whose other blocks were peeled. An end node with two
  // internally disjoint routes to distinct monitors outside the component
  // (or that is a monitor itself) is already told apart from the chain by
  // those routes, so the end block it borders needs no monitor; drop it.
  std::set<int> trimmed;
  std::vector<subgraph_ref> trims;
  for (const graph& comp : connected_components(remainder)) {
    if (comp.edge_count() == 0) continue;
    const graph outside = g.remove_links(comp.edges());
    for (const node_id& t : comp.nodes()) {
      const bool joins_peeled = std::any_of(
          d.blocks.begin(), d.blocks.end(), [&](const block& b) {
            return removal.contains(b.id) &&
                   std::binary_search(b.nodes.begin(), b.nodes.end(), t);
          });
      if (!joins_peeled) continue;
      if (!monitors.contains(t) &&
          disjoint_goal_routes(outside, t, monitors, 2) < 2) {
        continue;
      }
      for (const block& b : d.blocks) {
        if (b.edges.empty() || removal.contains(b.id) ||
            trimmed.contains(b.id)) {
          continue;
        }
        if (!std::binary_search(b.nodes.begin(), b.nodes.end(), t)) continue;
        trimmed.insert(b.id);
        trims.push_back(b.as_subgraph());
        result.trace.push_back({"omp/anchored-end-trim",
                                {t},
                                "",
                                edge_strings({b.as_subgraph()})});
      }
    }
  }
  if (!trims.empty()) remainder = remainder.subtract_subgraphs(trims);
  polygonless_run(remainder, cuts, r, monitors, result.trace);

  result.monitors.nodes.assign(monitors.begin(), monitors.end());
  return result;
}

}  // namespace failoc
