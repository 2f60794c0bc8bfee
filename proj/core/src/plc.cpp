#include "failoc/plc.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "failoc/tricomp.hpp"

namespace failoc {

namespace {

/// A cycle component separates neighboring plcs only from length 4 up;
/// triangles glue into plcs like bonds and 3-connected leaves do.
bool is_long_polygon(const tri_component& c) {
  return c.kind == tri_component::kind_t::polygon && c.size() >= 4;
}

struct disjoint_sets {
  std::vector<int> parent;
  explicit disjoint_sets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

std::vector<plc> plc_decompose(const block& b) {
  if (b.edges.empty()) return {};
  const auto comps = triconnected_components(b);

  std::vector<plc> out;
  // Each real edge of a long polygon stands alone as a bond plc.
  for (const tri_component& c : comps) {
    if (!is_long_polygon(c)) continue;
    for (const edge& e : c.real_edges) {
      plc p;
      p.parent_block = b.id;
      p.nodes = {e.a, e.b};
      std::sort(p.nodes.begin(), p.nodes.end());
      p.edges = {e};
      p.is_bond = true;
      out.push_back(std::move(p));
    }
  }

  // Everything else merges along shared virtual edges into one plc per
  // connected group; groups whose edges are all virtual vanish.
  disjoint_sets sets(comps.size());
  std::map<int, std::vector<std::size_t>> holders;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (is_long_polygon(comps[i])) continue;
    for (const auto& ve : comps[i].virtual_edges) {
      holders[ve.pair_id].push_back(i);
    }
  }
  for (const auto& [vid, where] : holders) {
    if (where.size() == 2) {
      sets.unite(static_cast<int>(where[0]), static_cast<int>(where[1]));
    }
  }
  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (is_long_polygon(comps[i])) continue;
    groups[sets.find(static_cast<int>(i))].push_back(i);
  }
  for (const auto& [root, members] : groups) {
    std::set<edge> edges;
    for (const std::size_t i : members) {
      edges.insert(comps[i].real_edges.begin(), comps[i].real_edges.end());
    }
    if (edges.empty()) continue;
    plc p;
    p.parent_block = b.id;
    p.edges.assign(edges.begin(), edges.end());
    std::set<node_id> nodes;
    for (const edge& e : p.edges) {
      nodes.insert(e.a);
      nodes.insert(e.b);
    }
    p.nodes.assign(nodes.begin(), nodes.end());
    p.is_bond = p.edges.size() == 1;
    out.push_back(std::move(p));
  }

  std::sort(out.begin(), out.end(),
            [](const plc& x, const plc& y) { return x.edges < y.edges; });
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].id = static_cast<int>(i);
  }
  return out;
}

bool block_is_plc(const block& b) {
  if (b.edges.empty()) return false;
  const auto plcs = plc_decompose(b);
  return plcs.size() == 1 && plcs[0].edges.size() == b.edges.size();
}

std::vector<plc> plc_agents(std::vector<plc> plcs, const graph& g) {
  const std::vector<node_id> cuts = cut_vertices(g);
  std::map<node_id, int> membership;
  for (const plc& p : plcs) {
    for (const node_id& v : p.nodes) ++membership[v];
  }
  for (plc& p : plcs) {
    p.agents.clear();
    for (const node_id& v : p.nodes) {
      if (membership[v] >= 2 ||
          std::binary_search(cuts.begin(), cuts.end(), v)) {
        p.agents.push_back(v);
      }
    }
  }
  return plcs;
}

namespace {

std::map<int, std::vector<int>> neighbor_map(const std::vector<plc>& plcs,
                                             int block_filter) {
  std::map<int, std::vector<int>> out;
  for (const plc& p : plcs) {
    if (block_filter >= 0 && p.parent_block != block_filter) continue;
    out[p.id];
    for (const plc& q : plcs) {
      if (q.id == p.id) continue;
      if (block_filter >= 0 && q.parent_block != block_filter) continue;
      std::vector<node_id> shared;
      std::set_intersection(p.nodes.begin(), p.nodes.end(), q.nodes.begin(),
                            q.nodes.end(), std::back_inserter(shared));
      if (!shared.empty()) out[p.id].push_back(q.id);
    }
  }
  return out;
}

}  // namespace

std::map<int, std::vector<int>> plc_neighbors(const std::vector<plc>& plcs) {
  return neighbor_map(plcs, -1);
}

std::map<int, std::vector<int>> plc_neighbors_within_block(
    const std::vector<plc>& plcs, int block_id) {
  return neighbor_map(plcs, block_id);
}

decomposition decompose(const graph& g) {
  decomposition d;
  d.blocks = biconnected_components(g);
  for (const block& b : d.blocks) {
    for (plc p : plc_decompose(b)) {
      d.plcs.push_back(std::move(p));
    }
  }
  std::sort(d.plcs.begin(), d.plcs.end(),
            [](const plc& x, const plc& y) { return x.edges < y.edges; });
  for (std::size_t i = 0; i < d.plcs.size(); ++i) {
    d.plcs[i].id = static_cast<int>(i);
  }
  d.plcs = plc_agents(std::move(d.plcs), g);
  return d;
}

}  // namespace failoc
