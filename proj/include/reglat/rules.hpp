#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "reglat/json_io.hpp"

namespace reglat {

// Named, parameterized, seedable rule descriptor; the serialized form of
// every edge/selection/initializer/integer rule.
struct RuleDesc {
  std::string name;
  json params = json::object();
  std::uint64_t seed = 0;
  bool has_seed = false;
};

RuleDesc rule_from_json(const json& j, const std::string& context);
json rule_to_json(const RuleDesc& r);

// Factories reject unknown names, missing parameters, and missing seeds for
// stochastic rules (ConfigError).
EdgeRule make_edge_rule(const RuleDesc& desc);
std::shared_ptr<SelectionRule> make_selection_rule(const RuleDesc& desc, std::size_t r);
std::shared_ptr<MinDominantRule> make_init_rule(const RuleDesc& desc);
IntegerRule make_integer_rule(const RuleDesc& desc);

}  // namespace reglat
