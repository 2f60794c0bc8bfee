#pragma once

#include <optional>
#include <string>
#include <vector>

#include "failoc/decompose.hpp"
#include "failoc/graph.hpp"

namespace failoc {

/// A verified tandem network: the block-cut tree is a path, every block is
/// a polygon-less component, and the designated external attach nodes sit
/// in terminal blocks without being cut vertices.
struct tandem_instance {
  graph g;
  std::vector<block> chain;      // blocks in path order
  std::vector<int> beta;         // per block: number of neighboring blocks
  std::vector<node_id> externals;  // attach nodes, aligned with chain ends
};

/// Outcome of is_tandem: either an instance or the violated condition.
struct tandem_check {
  bool accepted = false;
  std::string rejection;  // empty when accepted
  std::optional<tandem_instance> instance;
};

/// Validates g as a tandem network with the given external attach nodes:
/// exactly two distinct non-cut-vertex nodes, one in each terminal block
/// (both in the single block when the chain has length 1). Rejections
/// name the violated condition: "not-connected", "block-cut-tree-not-path",
/// "block-not-plc", or "bad-externals".
tandem_check is_tandem(const graph& g, const std::vector<node_id>& externals);

}  // namespace failoc
