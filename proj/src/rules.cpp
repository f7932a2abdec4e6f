#include "reglat/rules.hpp"

#include "reglat/error.hpp"

namespace reglat {

RuleDesc rule_from_json(const json& j, const std::string& context) {
  expect_keys(j, {"name", "params", "seed"}, context);
  if (!j.contains("name") || !j["name"].is_string())
    throw ConfigError(context + ": rule 'name' is required");
  RuleDesc out;
  out.name = j["name"].get<std::string>();
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw ConfigError(context + ": 'params' must be an object");
    out.params = j["params"];
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer() && !j["seed"].is_number_unsigned())
      throw ConfigError(context + ": 'seed' must be an integer");
    out.seed = j["seed"].get<std::uint64_t>();
    out.has_seed = true;
  }
  return out;
}

json rule_to_json(const RuleDesc& r) {
  json out;
  out["name"] = r.name;
  out["params"] = r.params;
  if (r.has_seed) out["seed"] = r.seed;
  return out;
}

namespace {

void require_seed(const RuleDesc& d) {
  if (!d.has_seed)
    throw ConfigError("rule '" + d.name + "' is stochastic and requires a seed");
}

double param_number(const RuleDesc& d, const std::string& key) {
  if (!d.params.contains(key) || !d.params[key].is_number())
    throw ConfigError("rule '" + d.name + "' requires numeric param '" + key + "'");
  return d.params[key].get<double>();
}

}  // namespace

EdgeRule make_edge_rule(const RuleDesc& desc) {
  bool strict = desc.params.value("strict", false);
  if (desc.name == "edgeless") {
    return edgeless_rule();
  }
  if (desc.name == "full-downward") {
    return full_downward_rule();
  }
  if (desc.name == "coordinate-dominance") {
    return coordinate_dominance_rule();
  }
  if (desc.name == "seeded-random") {
    require_seed(desc);
    double q = param_number(desc, "q");
    if (q < 0.0 || q > 1.0) throw ConfigError("seeded-random: q must be in [0,1]");
    return seeded_random_rule(q, desc.seed);
  }
  if (desc.name == "explicit") {
    if (!desc.params.contains("edges") || !desc.params["edges"].is_array())
      throw ConfigError("explicit edge rule requires an 'edges' array");
    std::vector<std::pair<Point, Point>> edges;
    for (const json& e : desc.params["edges"]) {
      if (!e.is_array() || e.size() != 2)
        throw ConfigError("explicit edge rule: each edge is [from, to]");
      edges.emplace_back(point_from_json(e[0]), point_from_json(e[1]));
    }
    return explicit_rule(std::move(edges), strict);
  }
  throw ConfigError("unknown edge rule '" + desc.name + "'");
}

std::shared_ptr<SelectionRule> make_selection_rule(const RuleDesc& desc, std::size_t r) {
  if (desc.name == "min-index") {
    return make_min_index_selection(r);
  }
  if (desc.name == "fixed-index") {
    std::size_t j = static_cast<std::size_t>(param_number(desc, "j"));
    return make_fixed_index_selection(r, j);
  }
  if (desc.name == "seeded-choice") {
    require_seed(desc);
    double q = param_number(desc, "q");
    if (q < 0.0 || q > 1.0) throw ConfigError("seeded-choice: q must be in [0,1]");
    return make_seeded_choice_selection(r, q, desc.seed);
  }
  if (desc.name == "table") {
    if (!desc.params.contains("entries") || !desc.params["entries"].is_array())
      throw ConfigError("table selection requires an 'entries' array");
    std::vector<SelectionTableEntry> entries;
    for (const json& row : desc.params["entries"]) {
      expect_keys(row, {"z", "reports", "choose"}, "table selection entry");
      SelectionTableEntry e;
      e.z = point_from_json(row.at("z"));
      for (const json& rep : row.at("reports")) {
        if (!rep.is_array() || rep.size() != 2)
          throw ConfigError("table selection: report must be [point, value]");
        e.reports.push_back({point_from_json(rep[0]), rep[1].get<std::uint64_t>()});
      }
      e.chosen_index = row.at("choose").get<std::size_t>();
      entries.push_back(std::move(e));
    }
    return make_table_selection(r, std::move(entries));
  }
  throw ConfigError("unknown selection rule '" + desc.name + "'");
}

std::shared_ptr<MinDominantRule> make_init_rule(const RuleDesc& desc) {
  if (desc.name == "min") return make_min_init();
  if (desc.name == "max") return make_max_init();
  if (desc.name == "min-plus-offset-table") {
    std::vector<std::pair<Point, std::uint64_t>> offsets;
    if (desc.params.contains("offsets")) {
      for (const json& row : desc.params["offsets"]) {
        if (!row.is_array() || row.size() != 2)
          throw ConfigError("min-plus-offset-table: offset row must be [point, offset]");
        offsets.emplace_back(point_from_json(row[0]), row[1].get<std::uint64_t>());
      }
    }
    return make_offset_table_init(std::move(offsets));
  }
  if (desc.name == "seeded-offset") {
    require_seed(desc);
    std::uint64_t range = desc.params.value("maxOffset", std::uint64_t{8});
    return make_seeded_offset_init(range, desc.seed);
  }
  if (desc.name == "tlog-designed") {
    require_seed(desc);
    std::uint64_t t = desc.params.value("t", std::uint64_t{1});
    bool zeros = desc.params.value("allowZeroDiffs", false);
    // The design needs the capped cube, so it binds lazily per domain.
    struct LazyDesigned final : MinDominantRule {
      std::uint64_t t, seed;
      bool zeros;
      LazyDesigned(std::uint64_t t_, std::uint64_t seed_, bool zeros_)
          : MinDominantRule("tlog-designed"), t(t_), seed(seed_), zeros(zeros_) {}
      std::shared_ptr<MinDominantRule> bind(const Domain& d) const {
        auto cap = cap_of(d);
        if (!cap)
          throw ConfigError("tlog-designed initializer requires a capped domain");
        return design_tlog_init(d, *cap, t, seed, {zeros});
      }
      std::uint64_t value(const Domain& d, const Point& x) const override {
        return bind(d)->value(d, x);
      }
      std::vector<std::uint64_t> materialize(const Domain& d) const override {
        return bind(d)->materialize(d);
      }
    };
    return std::make_shared<LazyDesigned>(t, desc.seed, zeros);
  }
  throw ConfigError("unknown initializer rule '" + desc.name + "'");
}

IntegerRule make_integer_rule(const RuleDesc& desc) {
  if (desc.name == "zero") return zero_integer_rule();
  if (desc.name == "seeded-hash-range") {
    require_seed(desc);
    std::int64_t lo = static_cast<std::int64_t>(param_number(desc, "lo"));
    std::int64_t hi = static_cast<std::int64_t>(param_number(desc, "hi"));
    return seeded_range_integer_rule(lo, hi, desc.seed);
  }
  if (desc.name == "table") {
    std::map<Point, std::int64_t> table;
    if (desc.params.contains("values")) {
      for (const json& row : desc.params["values"]) {
        if (!row.is_array() || row.size() != 2)
          throw ConfigError("table integer rule: row must be [point, value]");
        table[point_from_json(row[0])] = row[1].get<std::int64_t>();
      }
    }
    return [table](const Domain&, const Point& x) -> std::int64_t {
      auto it = table.find(x);
      return it == table.end() ? 0 : it->second;
    };
  }
  throw ConfigError("unknown integer rule '" + desc.name + "'");
}

}  // namespace reglat
