#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "failoc/oracle.hpp"
#include "failoc/placement.hpp"
#include "failoc/plc.hpp"

namespace failoc {

/// JSON documents used by the command-line tool and tests. Key order is
/// insertion order (nlohmann ordered_json) and every list is sorted, so a
/// document's bytes depend only on its inputs.
using json = nlohmann::ordered_json;

json to_json(const block& b);
json to_json(const plc& p);
json to_json(const decomposition& d);
json to_json(const trace_step& s);
json to_json(const placement_result& r);
json to_json(const identifiability_report& r);

std::string algorithm_name(placement_algorithm a);

/// Renders with 2-space indent and a trailing newline.
std::string dump_document(const json& doc);

}  // namespace failoc
