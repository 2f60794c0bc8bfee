#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "failoc/errors.hpp"
#include "failoc/graph.hpp"
#include "failoc/graph_gen.hpp"
#include "failoc/graph_io.hpp"
#include "failoc/json_out.hpp"
#include "failoc/oracle.hpp"
#include "failoc/placement.hpp"
#include "failoc/plc.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_not_identifiable = 1;
constexpr int exit_input_error = 2;
constexpr int exit_precondition = 3;
constexpr int exit_cap = 4;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw failoc::error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

failoc::json limits_json(const failoc::oracle_limits& limits) {
  return failoc::json{{"max_nodes", limits.max_nodes},
                      {"max_paths", limits.max_paths}};
}

struct place_opts {
  std::string input;
  std::uint64_t seed = 0;
  std::string algorithm = "omp-csp";
  std::vector<std::string> avoid;
  std::string format = "json";
};

int run_place(const place_opts& opt) {
  const failoc::graph g =
      failoc::parse_edge_list(read_input(opt.input));
  failoc::placement_result res;
  if (opt.algorithm == "omp-csp") {
    res = failoc::omp_csp(g, opt.seed);
  } else if (opt.algorithm == "biconnected") {
    res = failoc::monitors_in_biconnected(g, opt.seed);
  } else if (opt.algorithm == "polygonless") {
    res = failoc::monitors_in_polygonless(g, opt.avoid, opt.seed);
  } else {
    throw failoc::error("unknown algorithm '" + opt.algorithm + "'");
  }
  if (opt.format == "dot") {
    std::cout << failoc::to_dot(g, res.monitors);
  } else {
    std::cout << failoc::dump_document(failoc::to_json(res));
  }
  return exit_ok;
}

struct verify_opts {
  std::string input;
  std::vector<std::string> monitors;
  failoc::oracle_limits limits;
  bool strict_paths = false;
};

int run_verify(const verify_opts& opt) {
  const failoc::graph g =
      failoc::parse_edge_list(read_input(opt.input));
  const failoc::path_options paths{.monitors_as_interior = !opt.strict_paths};
  std::vector<std::string> names = opt.monitors;
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  const failoc::monitor_set monitors{names};
  const failoc::identifiability_report report =
      failoc::is_one_identifiable(g, monitors, opt.limits, paths);
  failoc::json doc{{"monitors", names},
                   {"strict_paths", opt.strict_paths},
                   {"limits", limits_json(opt.limits)}};
  doc.update(failoc::to_json(report));
  std::cout << failoc::dump_document(doc);
  return report.identifiable ? exit_ok : exit_not_identifiable;
}

struct min_opts {
  std::string input;
  failoc::oracle_limits limits;
  bool strict_paths = false;
};

int run_min(const min_opts& opt) {
  const failoc::graph g =
      failoc::parse_edge_list(read_input(opt.input));
  const failoc::path_options paths{.monitors_as_interior = !opt.strict_paths};
  const failoc::min_monitors_result res =
      failoc::min_monitors_bruteforce(g, opt.limits, paths);
  failoc::json doc{{"strict_paths", opt.strict_paths},
                   {"limits", limits_json(opt.limits)},
                   {"minimum", res.k},
                   {"witness", res.witness.nodes}};
  std::cout << failoc::dump_document(doc);
  return exit_ok;
}

int run_decompose(const std::string& input) {
  const failoc::graph g = failoc::parse_edge_list(read_input(input));
  const failoc::decomposition d = failoc::decompose(g);
  std::cout << failoc::dump_document(failoc::to_json(d));
  return exit_ok;
}

struct gen_opts {
  int nodes = 0;
  int edges = 0;
  std::uint64_t seed = 0;
};

int run_gen(const gen_opts& opt) {
  const failoc::graph g =
      failoc::random_connected_graph(opt.nodes, opt.edges, opt.seed);
  std::cout << "# nodes " << opt.nodes << " edges " << opt.edges << " seed "
            << opt.seed << "\n"
            << failoc::serialize_edge_list(g);
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "failoc: monitor placement for single-node-failure localization"};
  app.set_version_flag("--version", "1.0.0");
  app.require_subcommand(1);

  place_opts popt;
  CLI::App* place = app.add_subcommand(
      "place", "Compute a monitor placement for a connected graph");
  place->add_option("-i,--input", popt.input,
                    "edge-list file ('-' or omitted reads stdin)");
  place->add_option("-s,--seed", popt.seed, "random seed");
  place->add_option("-a,--algorithm", popt.algorithm,
                    "omp-csp | biconnected | polygonless")
      ->check(CLI::IsMember({"omp-csp", "biconnected", "polygonless"}));
  place->add_option("--avoid", popt.avoid,
                    "nodes the polygonless algorithm must not pick")
      ->delimiter(',');
  place->add_option("-f,--format", popt.format, "json | dot")
      ->check(CLI::IsMember({"json", "dot"}));

  verify_opts vopt;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check whether a monitor set localizes any single failure");
  verify->add_option("-i,--input", vopt.input,
                     "edge-list file ('-' or omitted reads stdin)");
  verify->add_option("-m,--monitors", vopt.monitors, "monitor nodes")
      ->required()
      ->delimiter(',');
  verify->add_option("--cap-nodes", vopt.limits.max_nodes,
                     "refuse graphs larger than this");
  verify->add_option("--cap-paths", vopt.limits.max_paths,
                     "abort after enumerating this many paths");
  verify->add_flag("--strict-paths", vopt.strict_paths,
                   "forbid monitors as path interiors");

  min_opts mopt;
  CLI::App* oracle_min = app.add_subcommand(
      "oracle-min", "Brute-force the minimum identifying monitor count");
  oracle_min->add_option("-i,--input", mopt.input,
                         "edge-list file ('-' or omitted reads stdin)");
  oracle_min->add_option("--cap-nodes", mopt.limits.max_nodes,
                         "refuse graphs larger than this");
  oracle_min->add_option("--cap-paths", mopt.limits.max_paths,
                         "abort after enumerating this many paths");
  oracle_min->add_flag("--strict-paths", mopt.strict_paths,
                       "forbid monitors as path interiors");

  std::string dinput;
  CLI::App* decomp = app.add_subcommand(
      "decompose", "Print blocks and polygon-less components as JSON");
  decomp->add_option("-i,--input", dinput,
                     "edge-list file ('-' or omitted reads stdin)");

  gen_opts gopt;
  CLI::App* gen = app.add_subcommand(
      "gen", "Emit a random connected graph as an edge list");
  gen->add_option("-n,--nodes", gopt.nodes, "node count")->required();
  gen->add_option("-e,--edges", gopt.edges, "edge count")->required();
  gen->add_option("-s,--seed", gopt.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return exit_input_error;
  }

  try {
    if (*place) return run_place(popt);
    if (*verify) return run_verify(vopt);
    if (*oracle_min) return run_min(mopt);
    if (*decomp) return run_decompose(dinput);
    if (*gen) return run_gen(gopt);
  } catch (const failoc::cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_cap;
  } catch (const failoc::disconnected_graph& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_precondition;
  } catch (const failoc::not_two_connected& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_precondition;
  } catch (const failoc::polygon_present& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_precondition;
  } catch (const failoc::no_eligible_node& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_precondition;
  } catch (const failoc::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  }
  return exit_ok;
}
