#include "failoc/json_out.hpp"

#include <algorithm>

namespace failoc {

namespace {

json edges_json(const std::vector<edge>& edges) {
  json out = json::array();
  for (const edge& e : edges) out.push_back(json::array({e.a, e.b}));
  return out;
}

}  // namespace

std::string algorithm_name(placement_algorithm a) {
  switch (a) {
    case placement_algorithm::polygonless:
      return "polygonless";
    case placement_algorithm::biconnected:
      return "biconnected";
    case placement_algorithm::omp_csp:
      return "omp-csp";
  }
  return "unknown";
}

json to_json(const block& b) {
  return json{{"id", b.id},
              {"nodes", b.nodes},
              {"edges", edges_json(b.edges)},
              {"cut_vertices", b.cut_vertices},
              {"is_bond", b.is_bond}};
}

json to_json(const plc& p) {
  return json{{"id", p.id},
              {"block", p.parent_block},
              {"nodes", p.nodes},
              {"edges", edges_json(p.edges)},
              {"agents", p.agents},
              {"is_bond", p.is_bond}};
}

json to_json(const decomposition& d) {
  json blocks = json::array();
  for (const block& b : d.blocks) blocks.push_back(to_json(b));
  json plcs = json::array();
  for (const plc& p : d.plcs) plcs.push_back(to_json(p));
  return json{{"blocks", blocks}, {"plcs", plcs}};
}

json to_json(const trace_step& s) {
  return json{{"rule", s.rule},
              {"candidates", s.candidates},
              {"chosen", s.chosen},
              {"removed", s.removed}};
}

json to_json(const placement_result& r) {
  json trace = json::array();
  for (const trace_step& s : r.trace) trace.push_back(to_json(s));
  return json{{"algorithm", algorithm_name(r.algorithm)},
              {"seed", r.seed},
              {"monitors", r.monitors.nodes},
              {"count", r.monitors.nodes.size()},
              {"trace", trace}};
}

json to_json(const identifiability_report& r) {
  json pairs = json::array();
  for (const auto& [a, b] : r.confusable_pairs) {
    pairs.push_back(json::array({a, b}));
  }
  return json{{"identifiable", r.identifiable},
              {"uncovered", r.uncovered},
              {"confusable_pairs", pairs}};
}

std::string dump_document(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace failoc
