#include "failoc/oracle.hpp"

#include <algorithm>

#include "failoc/errors.hpp"
#include "indexed.hpp"

namespace failoc {

namespace {

struct path_walker {
  const detail::indexed_view& view;
  const oracle_limits& limits;
  bool monitors_as_interior;
  std::vector<bool> is_monitor;
  std::vector<bool> on_path;
  std::vector<int> current;
  std::vector<measurement_path>* out;
  std::size_t count = 0;

  void run(int s, int t) {
    current = {s};
    on_path.assign(static_cast<std::size_t>(view.size()), false);
    on_path[static_cast<std::size_t>(s)] = true;
    extend(s, t);
  }

  void extend(int v, int t) {
    for (const int w : view.adj[static_cast<std::size_t>(v)]) {
      if (on_path[static_cast<std::size_t>(w)]) continue;
      if (w == t) {
        if (++count > limits.max_paths) {
          throw cap_exceeded("more than " + std::to_string(limits.max_paths) +
                             " measurement paths");
        }
        if (out) {
          measurement_path p;
          for (const int x : current) {
            p.nodes.push_back(view.ids[static_cast<std::size_t>(x)]);
          }
          p.nodes.push_back(view.ids[static_cast<std::size_t>(t)]);
          out->push_back(std::move(p));
        }
        continue;
      }
      if (!monitors_as_interior && is_monitor[static_cast<std::size_t>(w)]) {
        continue;
      }
      on_path[static_cast<std::size_t>(w)] = true;
      current.push_back(w);
      extend(w, t);
      current.pop_back();
      on_path[static_cast<std::size_t>(w)] = false;
    }
  }
};

void check_monitors(const graph& g, const monitor_set& monitors) {
  for (const node_id& m : monitors.nodes) {
    if (!g.has_node(m)) throw unknown_node("monitor '" + m + "' not in graph");
  }
}

void check_node_cap(const graph& g, const oracle_limits& limits) {
  if (g.node_count() > limits.max_nodes) {
    throw cap_exceeded("graph has " + std::to_string(g.node_count()) +
                       " nodes, oracle cap is " +
                       std::to_string(limits.max_nodes));
  }
}

}  // namespace

std::vector<measurement_path> enumerate_monitor_paths(
    const graph& g, const monitor_set& monitors, const oracle_limits& limits,
    const path_options& options) {
  check_monitors(g, monitors);
  check_node_cap(g, limits);

  const auto view = detail::indexed_view::of(g);
  path_walker walker{view, limits, options.monitors_as_interior};
  walker.is_monitor.assign(static_cast<std::size_t>(view.size()), false);
  for (const node_id& m : monitors.nodes) {
    walker.is_monitor[static_cast<std::size_t>(view.index_of(m))] = true;
  }
  std::vector<measurement_path> paths;
  walker.out = &paths;
  // Monitor pairs in identifier order; DFS with sorted adjacency emits
  // each pair's paths in lexicographic node-sequence order.
  for (std::size_t i = 0; i < monitors.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < monitors.nodes.size(); ++j) {
      walker.run(view.index_of(monitors.nodes[i]),
                 view.index_of(monitors.nodes[j]));
    }
  }
  return paths;
}

std::map<node_id, std::vector<int>> path_signature(
    const graph& g, const monitor_set& monitors, const oracle_limits& limits,
    const path_options& options) {
  const auto paths = enumerate_monitor_paths(g, monitors, limits, options);
  std::map<node_id, std::vector<int>> sig;
  for (const node_id& v : g.nodes()) {
    if (!monitors.contains(v)) sig[v];
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (const node_id& v : paths[i].nodes) {
      if (auto it = sig.find(v); it != sig.end()) {
        it->second.push_back(static_cast<int>(i));
      }
    }
  }
  return sig;
}

bool distinguishable(const graph& g, const monitor_set& monitors,
                     const node_id& u, const node_id& w,
                     const oracle_limits& limits, const path_options& options) {
  if (u == w) throw same_node("cannot distinguish '" + u + "' from itself");
  for (const node_id* v : {&u, &w}) {
    if (!g.has_node(*v) || monitors.contains(*v)) {
      throw not_non_monitor("'" + *v + "' is not a non-monitor node");
    }
  }
  const auto sig = path_signature(g, monitors, limits, options);
  return sig.at(u) != sig.at(w);
}

identifiability_report is_one_identifiable(const graph& g,
                                           const monitor_set& monitors,
                                           const oracle_limits& limits,
                                           const path_options& options) {
  const auto sig = path_signature(g, monitors, limits, options);
  identifiability_report report;
  for (const auto& [v, paths] : sig) {
    if (paths.empty()) report.uncovered.push_back(v);
  }
  for (auto it = sig.begin(); it != sig.end(); ++it) {
    for (auto jt = std::next(it); jt != sig.end(); ++jt) {
      if (it->second == jt->second && !it->second.empty()) {
        report.confusable_pairs.emplace_back(it->first, jt->first);
      }
    }
  }
  report.identifiable =
      report.uncovered.empty() && report.confusable_pairs.empty();
  return report;
}

min_monitors_result min_monitors_bruteforce(const graph& g,
                                            const oracle_limits& limits,
                                            const path_options& options) {
  check_node_cap(g, limits);
  const std::vector<node_id>& nodes = g.nodes();
  const std::size_t n = nodes.size();
  for (std::size_t k = 0; k <= n; ++k) {
    // Subsets of size k in lexicographic order over the sorted node list.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      monitor_set m;
      for (const std::size_t i : idx) m.nodes.push_back(nodes[i]);
      if (is_one_identifiable(g, m, limits, options).identifiable) {
        return {k, std::move(m)};
      }
      // Advance to the next combination.
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  // Unreachable: monitors everywhere are vacuously identifiable.
  return {n, monitor_set{nodes}};
}

}  // namespace failoc
