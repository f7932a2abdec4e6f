#pragma once

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "reglat/graph.hpp"
#include "reglat/labelers.hpp"
#include "reglat/regularity.hpp"
#include "reglat/subsetsum.hpp"

namespace reglat {

using json = nlohmann::json;

// Object keys serialize sorted and every emitted list is in canonical order,
// so equal values produce byte-identical documents.

json point_to_json(const Point& p);
Point point_from_json(const json& j);

json domain_to_json(const Domain& d);
std::shared_ptr<const Domain> domain_from_json(const json& j);

json cube_to_json(const Cube& e);
Cube cube_from_json(const json& j);

// Edges as index pairs into the canonical point ordering.
json graph_to_json(const DownwardGraph& g);
DownwardGraph graph_from_json(const json& j);

json labeling_to_json(const Labeling& l);
Labeling labeling_from_json(const json& j);

json regularity_report_to_json(const RegularityReport& r);

json instance_set_to_json(const InstanceSet& h);
InstanceSet instance_set_from_json(const json& j);

json solve_result_to_json(const SolveResult& r, const InstanceSet& h);

// Rejects keys outside the allowed set; context names the object in errors.
void expect_keys(const json& j, const std::vector<std::string>& allowed,
                 const std::string& context);

}  // namespace reglat
