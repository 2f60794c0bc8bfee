#include "failoc/tricomp.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "failoc/errors.hpp"

namespace failoc {

namespace {

/// Working edge of the splitter. Real edges carry an index into the
/// block's edge list; virtual edges carry the pair id they were split on.
struct tedge {
  int u, v;        // block-local node indices, u < v
  int real = -1;   // >= 0 for real edges
  int vid = -1;    // >= 0 for virtual edges
};

using tgraph = std::vector<tedge>;

std::vector<int> node_set(const tgraph& g) {
  std::set<int> s;
  for (const tedge& e : g) {
    s.insert(e.u);
    s.insert(e.v);
  }
  return {s.begin(), s.end()};
}

/// Connected component index per node, ignoring nodes in `removed`.
std::map<int, int> components_without(const tgraph& g, int skip_a, int skip_b) {
  std::map<int, std::vector<int>> adj;
  for (const tedge& e : g) {
    if (e.u == skip_a || e.u == skip_b || e.v == skip_a || e.v == skip_b) {
      if (e.u != skip_a && e.u != skip_b) adj[e.u];
      if (e.v != skip_a && e.v != skip_b) adj[e.v];
      continue;
    }
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::map<int, int> comp;
  int next = 0;
  for (const auto& [start, unused] : adj) {
    if (comp.contains(start)) continue;
    std::vector<int> stack{start};
    comp[start] = next;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const int y : adj[x]) {
        if (!comp.contains(y)) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool is_simple(const tgraph& g) {
  std::set<std::pair<int, int>> seen;
  for (const tedge& e : g) {
    if (!seen.insert({e.u, e.v}).second) return false;
  }
  return true;
}

bool is_cycle(const tgraph& g) {
  if (!is_simple(g)) return false;
  const auto nodes = node_set(g);
  if (nodes.size() < 3 || g.size() != nodes.size()) return false;
  std::map<int, int> deg;
  for (const tedge& e : g) {
    ++deg[e.u];
    ++deg[e.v];
  }
  for (const auto& [v, d] : deg) {
    if (d != 2) return false;
  }
  int groups = 0;
  for (const auto& [v, c] : components_without(g, -1, -1)) {
    groups = std::max(groups, c + 1);
  }
  return groups == 1;
}

/// First separation pair in index order, or nullopt.
std::optional<std::pair<int, int>> find_separation_pair(const tgraph& g) {
  const auto nodes = node_set(g);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      const auto comp = components_without(g, nodes[i], nodes[j]);
      int groups = 0;
      for (const auto& [v, c] : comp) groups = std::max(groups, c + 1);
      if (groups >= 2) return std::make_pair(nodes[i], nodes[j]);
    }
  }
  return std::nullopt;
}

struct raw_component {
  tgraph edges;
  tri_component::kind_t kind;
};

tri_component::kind_t classify(const tgraph& g) {
  if (node_set(g).size() == 2) return tri_component::kind_t::bond;
  if (is_cycle(g)) return tri_component::kind_t::polygon;
  return tri_component::kind_t::triconnected;
}

std::vector<raw_component> split_components(tgraph start, int& next_vid) {
  std::vector<raw_component> done;
  std::vector<tgraph> work{std::move(start)};
  while (!work.empty()) {
    tgraph g = std::move(work.back());
    work.pop_back();

    if (node_set(g).size() == 2) {
      done.push_back({std::move(g), tri_component::kind_t::bond});
      continue;
    }
    // Parallel class: split it off as a bond before anything else.
    std::map<std::pair<int, int>, int> mult;
    for (const tedge& e : g) ++mult[{e.u, e.v}];
    std::optional<std::pair<int, int>> par;
    for (const auto& [uv, k] : mult) {
      if (k >= 2) {
        par = uv;
        break;
      }
    }
    if (par) {
      const int vid = next_vid++;
      tgraph bond, rest;
      for (const tedge& e : g) {
        (std::pair{e.u, e.v} == *par ? bond : rest).push_back(e);
      }
      bond.push_back(tedge{par->first, par->second, -1, vid});
      rest.push_back(tedge{par->first, par->second, -1, vid});
      done.push_back({std::move(bond), tri_component::kind_t::bond});
      work.push_back(std::move(rest));
      continue;
    }
    if (is_cycle(g)) {
      done.push_back({std::move(g), tri_component::kind_t::polygon});
      continue;
    }
    const auto pair = find_separation_pair(g);
    if (!pair) {
      done.push_back({std::move(g), tri_component::kind_t::triconnected});
      continue;
    }
    const auto [u, v] = *pair;
    const auto comp = components_without(g, u, v);
    // Side one: the component class holding the smallest outside node.
    int chosen = comp.begin()->second;
    const int vid = next_vid++;
    tgraph side1, side2;
    for (const tedge& e : g) {
      const int anchor = (e.u != u && e.u != v) ? e.u
                         : (e.v != u && e.v != v) ? e.v
                                                  : -1;
      if (anchor != -1 && comp.at(anchor) == chosen) {
        side1.push_back(e);
      } else {
        side2.push_back(e);  // other classes plus any direct u-v edge
      }
    }
    side1.push_back(tedge{u, v, -1, vid});
    side2.push_back(tedge{u, v, -1, vid});
    work.push_back(std::move(side1));
    work.push_back(std::move(side2));
  }
  return done;
}

/// Merge adjacent same-kind bond/bond and polygon/polygon components until
/// no two share a virtual edge (the canonical form).
void merge_same_kind(std::vector<raw_component>& comps) {
  for (bool changed = true; changed;) {
    changed = false;
    std::map<int, std::vector<std::size_t>> holders;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      for (const tedge& e : comps[i].edges) {
        if (e.vid >= 0) holders[e.vid].push_back(i);
      }
    }
    for (const auto& [vid, where] : holders) {
      if (where.size() != 2 || where[0] == where[1]) continue;
      auto& a = comps[where[0]];
      auto& b = comps[where[1]];
      if (a.kind != b.kind || a.kind == tri_component::kind_t::triconnected) {
        continue;
      }
      tgraph merged;
      for (const tedge& e : a.edges) {
        if (e.vid != vid) merged.push_back(e);
      }
      for (const tedge& e : b.edges) {
        if (e.vid != vid) merged.push_back(e);
      }
      a.edges = std::move(merged);
      a.kind = classify(a.edges);
      comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(where[1]));
      changed = true;
      break;
    }
  }
}

}  // namespace

std::vector<tri_component> triconnected_components(const block& b) {
  if (b.edges.empty()) return {};

  const graph g = graph::make(b.nodes, b.edges);
  if (!is_connected(g) || !cut_vertices(g).empty()) {
    throw not_biconnected("block is not biconnected");
  }

  std::vector<node_id> ids = b.nodes;
  std::sort(ids.begin(), ids.end());
  auto index_of = [&](const node_id& v) {
    return static_cast<int>(
        std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };

  tgraph start;
  for (std::size_t i = 0; i < b.edges.size(); ++i) {
    int u = index_of(b.edges[i].a);
    int v = index_of(b.edges[i].b);
    if (v < u) std::swap(u, v);
    start.push_back(tedge{u, v, static_cast<int>(i), -1});
  }

  int next_vid = 0;
  auto raw = split_components(std::move(start), next_vid);
  merge_same_kind(raw);

  std::vector<tri_component> out;
  for (const raw_component& rc : raw) {
    tri_component tc;
    tc.kind = rc.kind;
    std::set<node_id> nodes;
    for (const tedge& e : rc.edges) {
      nodes.insert(ids[static_cast<std::size_t>(e.u)]);
      nodes.insert(ids[static_cast<std::size_t>(e.v)]);
      if (e.real >= 0) {
        tc.real_edges.push_back(b.edges[static_cast<std::size_t>(e.real)]);
      } else {
        node_id x = ids[static_cast<std::size_t>(e.u)];
        node_id y = ids[static_cast<std::size_t>(e.v)];
        if (y < x) std::swap(x, y);
        tc.virtual_edges.push_back({std::move(x), std::move(y), e.vid});
      }
    }
    tc.nodes.assign(nodes.begin(), nodes.end());
    std::sort(tc.real_edges.begin(), tc.real_edges.end());
    std::sort(tc.virtual_edges.begin(), tc.virtual_edges.end());
    out.push_back(std::move(tc));
  }
  std::sort(out.begin(), out.end(),
            [](const tri_component& x, const tri_component& y) {
              if (x.nodes != y.nodes) return x.nodes < y.nodes;
              if (x.real_edges != y.real_edges) {
                return x.real_edges < y.real_edges;
              }
              return x.virtual_edges < y.virtual_edges;
            });
  return out;
}

}  // namespace failoc
