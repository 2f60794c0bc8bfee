#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <set>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "failoc/decompose.hpp"
#include "failoc/graph.hpp"
#include "failoc/graph_gen.hpp"
#include "failoc/oracle.hpp"
#include "failoc/placement.hpp"
#include "failoc/plc.hpp"
#include "failoc/rng.hpp"
#include "failoc/tandem.hpp"
#include "support/brute.hpp"

using failoc::edge;
using failoc::graph;
using failoc::monitor_set;
using failoc::node_id;
using failoc::oracle_limits;

namespace {

std::string cli_path;

struct criterion {
  int number;
  std::string title;
  bool ok = true;
  std::string detail;

  criterion(int n, std::string t) : number(n), title(std::move(t)) {}

  void fail(const std::string& why) {
    if (ok) {
      ok = false;
      detail = why;
    }
  }

  void finish() {
    if (ok) {
      std::printf("[PASS] criterion %d: %s\n", number, title.c_str());
    } else {
      std::printf("[FAIL] criterion %d: %s (%s)\n", number, title.c_str(),
                  detail.c_str());
    }
    std::fflush(stdout);
    CHECK_MESSAGE(ok, detail);
  }
};

graph cycle(const std::vector<node_id>& nodes) {
  std::vector<edge> edges;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    edges.push_back(edge::make(nodes[i], nodes[(i + 1) % nodes.size()]));
  }
  return graph::from_edges(std::move(edges));
}

graph path_graph(const std::vector<node_id>& nodes) {
  std::vector<edge> edges;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    edges.push_back(edge::make(nodes[i], nodes[i + 1]));
  }
  return graph::from_edges(std::move(edges));
}

graph complete(const std::vector<node_id>& nodes) {
  std::vector<edge> edges;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      edges.push_back(edge::make(nodes[i], nodes[j]));
    }
  }
  return graph::from_edges(std::move(edges));
}

graph wheel(int n) {
  std::vector<node_id> rim;
  for (int i = 1; i < n; ++i) rim.push_back("r" + std::to_string(i));
  graph g = cycle(rim);
  std::vector<edge> spokes;
  for (const node_id& v : rim) spokes.push_back(edge::make("hub", v));
  return graph_union(g, graph::from_edges(std::move(spokes)));
}

std::string run_cli(const std::string& args, const std::string& stdin_text,
                    int* exit_code) {
  std::string cmd = "printf '%s' '" + stdin_text + "' | '" + cli_path + "' " +
                    args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

}  // namespace

TEST_CASE("optimality against the brute-force oracle") {
  criterion c{1, "placements are minimum on every small and mid-size graph"};
  const oracle_limits small{.max_nodes = 12, .max_paths = 200000};

  std::size_t five_node_graphs = 0;
  for (int n = 1; n <= 5 && c.ok; ++n) {
    brute::for_each_connected_graph(n, [&](const graph& g) {
      if (!c.ok) return;
      if (n == 5) ++five_node_graphs;
      const auto best = failoc::min_monitors_bruteforce(g, small);
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto placed = failoc::omp_csp(g, seed);
        if (placed.monitors.nodes.size() != best.k) {
          c.fail("suboptimal on n=" + std::to_string(n) + " seed " +
                 std::to_string(seed) + ": got " +
                 std::to_string(placed.monitors.nodes.size()) + ", minimum " +
                 std::to_string(best.k));
          return;
        }
        if (!failoc::is_one_identifiable(g, placed.monitors, small)
                 .identifiable) {
          c.fail("placement not identifiable on a " + std::to_string(n) +
                 "-node graph");
          return;
        }
      }
    });
  }
  if (c.ok && five_node_graphs != 728) {
    c.fail("expected 728 connected labeled 5-node graphs, saw " +
           std::to_string(five_node_graphs));
  }

  const oracle_limits mid{.max_nodes = 16, .max_paths = 2000000};
  int instances = 0;
  for (int n = 6; n <= 9 && c.ok; ++n) {
    const int lo = n - 1;
    const int hi = n * (n - 1) / 2;
    for (int step = 0; step < 16 && c.ok; ++step) {
      const int m = lo + static_cast<int>((static_cast<long>(step) * (hi - lo)) / 15);
      for (std::uint64_t seed = 1; seed <= 5 && c.ok; ++seed) {
        const graph g = failoc::random_connected_graph(
            static_cast<std::size_t>(n), static_cast<std::size_t>(m),
            971 * static_cast<std::uint64_t>(n) + 37 * static_cast<std::uint64_t>(m) + seed);
        ++instances;
        const auto best = failoc::min_monitors_bruteforce(g, mid);
        const auto placed = failoc::omp_csp(g, seed);
        if (placed.monitors.nodes.size() != best.k) {
          c.fail("suboptimal on n=" + std::to_string(n) + " m=" +
                 std::to_string(m) + " seed " + std::to_string(seed) +
                 ": got " + std::to_string(placed.monitors.nodes.size()) +
                 ", minimum " + std::to_string(best.k));
        } else if (!failoc::is_one_identifiable(g, placed.monitors, mid)
                        .identifiable) {
          c.fail("placement not identifiable on n=" + std::to_string(n) +
                 " m=" + std::to_string(m));
        }
      }
    }
  }
  if (c.ok && instances != 320) {
    c.fail("expected 320 mid-size instances, ran " + std::to_string(instances));
  }
  c.finish();
}

namespace {

/// Chain of unit blocks (0 = bond, 1 = K4, 2 = K5) glued at shared nodes,
/// plus the two terminal attach nodes.
struct chain_instance {
  graph g;
  node_id first;
  node_id last;
};

chain_instance build_chain(const std::vector<int>& units) {
  std::vector<edge> edges;
  int serial = 0;
  auto fresh = [&] {
    ++serial;
    char buf[8];
    std::snprintf(buf, sizeof buf, "n%02d", serial);
    return node_id(buf);
  };

  node_id shared;
  node_id first;
  for (std::size_t i = 0; i < units.size(); ++i) {
    const int size = units[i] == 0 ? 2 : (units[i] == 1 ? 4 : 5);
    std::vector<node_id> members;
    if (i == 0) {
      members.push_back(fresh());
      first = members.front();
    } else {
      members.push_back(shared);
    }
    while (members.size() < static_cast<std::size_t>(size)) {
      members.push_back(fresh());
    }
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        edges.push_back(edge::make(members[a], members[b]));
      }
    }
    shared = members.back();
  }
  return chain_instance{graph::from_edges(std::move(edges)), first, shared};
}

}  // namespace

TEST_CASE("chain placements are minimal given terminal monitors") {
  criterion c{2, "polygon-free chains get minimum internal monitor sets"};
  const oracle_limits big{.max_nodes = 32, .max_paths = 4000000};

  std::vector<std::vector<int>> combos;
  for (int a = 0; a < 3; ++a) combos.push_back({a});
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) combos.push_back({a, b});
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int d = 0; d < 3; ++d) combos.push_back({a, b, d});
    }
  }
  {
    failoc::rng sampler(20260817);
    std::vector<int> indices(81);
    for (int i = 0; i < 81; ++i) indices[i] = i;
    for (int k = 0; k < 27; ++k) {
      const auto j = k + static_cast<int>(sampler.below(81 - k));
      std::swap(indices[k], indices[j]);
    }
    std::vector<int> chosen(indices.begin(), indices.begin() + 27);
    std::sort(chosen.begin(), chosen.end());
    for (const int idx : chosen) {
      combos.push_back({idx / 27, (idx / 9) % 3, (idx / 3) % 3, idx % 3});
    }
  }

  int instance_count = 0;
  for (const auto& units : combos) {
    if (!c.ok) break;
    const chain_instance chain = build_chain(units);
    ++instance_count;

    const auto check = is_tandem(chain.g, {chain.first, chain.last});
    if (!check.accepted) {
      c.fail("chain rejected as tandem: " + check.rejection);
      break;
    }

    const auto [grown, stubs] = attach_external_monitors(
        chain.g, std::vector<node_id>{chain.first, chain.last});
    // Ineligible picks: cut vertices plus the nodes the externals attach
    // to, since a monitor there adds no distinguishing paths.
    std::vector<node_id> ineligible = cut_vertices(chain.g);
    ineligible.push_back(chain.first);
    ineligible.push_back(chain.last);
    std::sort(ineligible.begin(), ineligible.end());
    ineligible.erase(std::unique(ineligible.begin(), ineligible.end()),
                     ineligible.end());
    const auto internal = monitors_in_polygonless(chain.g, ineligible, 1);

    std::vector<node_id> total = stubs.nodes;
    total.insert(total.end(), internal.monitors.nodes.begin(),
                 internal.monitors.nodes.end());
    std::sort(total.begin(), total.end());
    if (!failoc::is_one_identifiable(grown, monitor_set{total}, big)
             .identifiable) {
      c.fail("chain placement not identifiable with " +
             std::to_string(internal.monitors.nodes.size()) +
             " internal monitors");
      break;
    }

    // No internal set one smaller may work, scanning all candidates.
    const std::size_t k = internal.monitors.nodes.size();
    if (k == 0) continue;
    if (k == 1) {
      if (failoc::is_one_identifiable(grown, stubs, big).identifiable) {
        c.fail("terminal monitors alone already identify the chain");
      }
      continue;
    }
    const auto& pool = chain.g.nodes();
    std::vector<std::size_t> idx(k - 1);
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    while (c.ok) {
      std::vector<node_id> candidate = stubs.nodes;
      for (const std::size_t i : idx) candidate.push_back(pool[i]);
      std::sort(candidate.begin(), candidate.end());
      if (failoc::is_one_identifiable(grown, monitor_set{candidate}, big)
              .identifiable) {
        c.fail("a smaller internal set suffices on a chain of " +
               std::to_string(units.size()) + " blocks");
      }
      // Advance the combination.
      bool advanced = false;
      std::size_t pos = idx.size();
      while (pos > 0) {
        --pos;
        if (idx[pos] < pool.size() - (idx.size() - pos)) {
          ++idx[pos];
          for (std::size_t q = pos + 1; q < idx.size(); ++q) {
            idx[q] = idx[q - 1] + 1;
          }
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
  if (c.ok && instance_count < 50) {
    c.fail("expected at least 50 chain instances, ran " +
           std::to_string(instance_count));
  }
  c.finish();
}

TEST_CASE("fixture families place stable counts") {
  criterion c{3, "fixture monitor counts match their frozen values"};
  const std::vector<std::pair<graph, std::size_t>> fixtures = {
      {cycle({"1", "2", "3"}), 2},
      {cycle({"1", "2", "3", "4"}), 2},
      {cycle({"1", "2", "3", "4", "5"}), 3},
      {cycle({"1", "2", "3", "4", "5", "6"}), 3},
      {path_graph({"a", "b"}), 2},
      {path_graph({"a", "b", "c"}), 2},
      {path_graph({"a", "b", "c", "d"}), 3},
      {graph::from_edges({edge::make("c", "x"), edge::make("c", "y"),
                          edge::make("c", "z")}),
       3},
      {complete({"1", "2", "3", "4"}), 2},
      {graph::from_edges({edge::make("a", "b"), edge::make("a", "c"),
                          edge::make("b", "c"), edge::make("c", "d"),
                          edge::make("c", "e"), edge::make("d", "e")}),
       2},
  };
  for (std::size_t i = 0; i < fixtures.size() && c.ok; ++i) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto placed = omp_csp(fixtures[i].first, seed);
      if (placed.monitors.nodes.size() != fixtures[i].second) {
        c.fail("fixture " + std::to_string(i) + " seed " +
               std::to_string(seed) + ": got " +
               std::to_string(placed.monitors.nodes.size()) + ", expected " +
               std::to_string(fixtures[i].second));
        break;
      }
      if (!failoc::is_one_identifiable(fixtures[i].first, placed.monitors)
               .identifiable) {
        c.fail("fixture " + std::to_string(i) + " placement not identifiable");
        break;
      }
    }
  }
  c.finish();
}

TEST_CASE("dense families accept any two monitors") {
  criterion c{4, "complete graphs and wheels are identifiable from any pair"};
  std::vector<graph> family = {complete({"1", "2", "3", "4"}),
                               complete({"1", "2", "3", "4", "5"}), wheel(5),
                               wheel(6), wheel(7)};
  const oracle_limits limits{.max_nodes = 12, .max_paths = 500000};
  for (const graph& g : family) {
    if (!c.ok) break;
    const auto& nodes = g.nodes();
    for (std::size_t i = 0; i < nodes.size() && c.ok; ++i) {
      for (std::size_t j = i + 1; j < nodes.size() && c.ok; ++j) {
        const monitor_set m{{nodes[i], nodes[j]}};
        if (!failoc::is_one_identifiable(g, m, limits).identifiable) {
          c.fail("pair {" + nodes[i] + "," + nodes[j] + "} fails on a " +
                 std::to_string(nodes.size()) + "-node graph");
        }
      }
    }
  }
  c.finish();
}

TEST_CASE("structural invariants hold on a thousand random graphs") {
  criterion c{5, "decomposition and oracle invariants on random graphs"};
  failoc::rng gen(20260817);
  const oracle_limits limits{.max_nodes = 16, .max_paths = 500000};

  for (int trial = 0; trial < 1000 && c.ok; ++trial) {
    const std::size_t n = 1 + gen.below(10);
    const std::size_t hi = n * (n - 1) / 2;
    const std::size_t lo = n == 0 ? 0 : n - 1;
    const std::size_t m = lo + gen.below(hi - lo + 1);
    const graph g = failoc::random_connected_graph(n, m, gen.next());

    // Blocks partition the edges.
    const auto blocks = biconnected_components(g);
    std::vector<edge> covered;
    for (const auto& b : blocks) {
      covered.insert(covered.end(), b.edges.begin(), b.edges.end());
    }
    std::sort(covered.begin(), covered.end());
    if (covered != g.edges() ||
        std::adjacent_find(covered.begin(), covered.end()) != covered.end()) {
      c.fail("blocks do not partition the edges");
      break;
    }

    // Plcs partition each block's edges.
    const auto d = failoc::decompose(g);
    for (const auto& b : blocks) {
      std::vector<edge> plc_edges;
      for (const auto& p : d.plcs) {
        if (p.parent_block != b.id) continue;
        plc_edges.insert(plc_edges.end(), p.edges.begin(), p.edges.end());
      }
      std::sort(plc_edges.begin(), plc_edges.end());
      if (plc_edges != b.edges) {
        c.fail("plcs do not partition a block");
        break;
      }
    }
    if (!c.ok) break;

    // Cut vertices agree with the deletion oracle.
    if (cut_vertices(g) != brute::cut_vertices(g)) {
      c.fail("cut vertices disagree with the deletion oracle");
      break;
    }

    // Subtracting a block keeps exactly the still-connected nodes.
    if (!blocks.empty() && !blocks.front().edges.empty()) {
      const auto part = blocks.front().as_subgraph();
      const graph rest = g.subtract_subgraphs(std::vector<failoc::subgraph_ref>{part});
      for (const node_id& v : g.nodes()) {
        const bool in_part = std::binary_search(part.nodes.begin(),
                                                part.nodes.end(), v);
        const bool kept = rest.has_node(v);
        if (!in_part && !kept) {
          c.fail("a node outside the removed part disappeared");
          break;
        }
        if (in_part && kept && rest.degree(v) == 0) {
          c.fail("an isolated part node survived the subtraction");
          break;
        }
      }
      if (!c.ok) break;
    }

    // Growing a monitor set never breaks identifiability.
    if (n >= 4) {
      const auto& nodes = g.nodes();
      const node_id a = nodes[gen.below(nodes.size())];
      node_id b = nodes[gen.below(nodes.size())];
      while (b == a) b = nodes[gen.below(nodes.size())];
      node_id extra = nodes[gen.below(nodes.size())];
      while (extra == a || extra == b) extra = nodes[gen.below(nodes.size())];
      std::vector<node_id> two{a, b};
      std::sort(two.begin(), two.end());
      std::vector<node_id> three{a, b, extra};
      std::sort(three.begin(), three.end());
      if (failoc::is_one_identifiable(g, monitor_set{two}, limits)
              .identifiable &&
          !failoc::is_one_identifiable(g, monitor_set{three}, limits)
               .identifiable) {
        c.fail("adding a monitor destroyed identifiability");
        break;
      }
    }
  }
  c.finish();
}

TEST_CASE("command line output is byte-stable") {
  criterion c{6, "repeated command line runs emit identical bytes"};
  if (cli_path.empty()) {
    c.fail("no command line binary path supplied");
    c.finish();
    return;
  }
  int code = 0;
  const std::string input = run_cli("gen -n 8 -e 13 -s 4", "", &code);
  if (code != 0) c.fail("gen failed");
  for (const std::string& args :
       {std::string("place -s 9"), std::string("decompose"),
        std::string("oracle-min --cap-nodes 16 --cap-paths 500000")}) {
    if (!c.ok) break;
    int first_code = 0;
    const std::string first = run_cli(args, input, &first_code);
    if (first.empty()) {
      c.fail("no output from '" + args + "'");
      break;
    }
    for (int i = 0; i < 2 && c.ok; ++i) {
      int again_code = 0;
      const std::string again = run_cli(args, input, &again_code);
      if (again != first || again_code != first_code) {
        c.fail("run " + std::to_string(i + 2) + " of '" + args +
               "' differed");
      }
    }
  }
  c.finish();
}

int main(int argc, char** argv) {
  if (argc > 1) cli_path = argv[argc - 1];
  doctest::Context ctx;
  return ctx.run();
}
