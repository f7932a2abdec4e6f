#include "reglat/json_io.hpp"

#include <algorithm>

#include "reglat/error.hpp"

namespace reglat {

void expect_keys(const json& j, const std::vector<std::string>& allowed,
                 const std::string& context) {
  if (!j.is_object()) throw ConfigError(context + ": expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      throw ConfigError(context + ": unknown field '" + it.key() + "'");
  }
}

namespace {

std::uint64_t uint_from_json(const json& j, const std::string& context) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  throw ConfigError(context + ": expected a nonnegative integer");
}

}  // namespace

json point_to_json(const Point& p) {
  json a = json::array();
  for (std::uint64_t c : p.coords) a.push_back(c);
  return a;
}

Point point_from_json(const json& j) {
  if (!j.is_array()) throw ConfigError("point: expected an array of coordinates");
  Point p;
  for (const json& c : j) p.coords.push_back(uint_from_json(c, "point coordinate"));
  return p;
}

json domain_to_json(const Domain& d) {
  json out;
  out["k"] = d.arity();
  json pts = json::array();
  for (const Point& p : d.points()) pts.push_back(point_to_json(p));
  out["points"] = pts;
  return out;
}

std::shared_ptr<const Domain> domain_from_json(const json& j) {
  expect_keys(j, {"k", "points"}, "domain");
  if (!j.contains("k") || !j.contains("points"))
    throw ConfigError("domain: fields 'k' and 'points' are required");
  std::size_t k = uint_from_json(j["k"], "domain k");
  std::vector<Point> pts;
  for (const json& p : j["points"]) {
    Point pt = point_from_json(p);
    if (pt.arity() != k) throw ConfigError("domain: point arity differs from k");
    pts.push_back(std::move(pt));
  }
  return std::make_shared<Domain>(std::move(pts));
}

json cube_to_json(const Cube& e) {
  json out;
  out["E"] = e.base();
  out["k"] = e.arity();
  return out;
}

Cube cube_from_json(const json& j) {
  expect_keys(j, {"E", "k"}, "cube");
  if (!j.contains("E") || !j.contains("k"))
    throw ConfigError("cube: fields 'E' and 'k' are required");
  std::vector<std::uint64_t> base;
  for (const json& v : j["E"]) base.push_back(uint_from_json(v, "cube base value"));
  return Cube(std::move(base), uint_from_json(j["k"], "cube k"));
}

json graph_to_json(const DownwardGraph& g) {
  json out;
  out["k"] = g.domain().arity();
  json pts = json::array();
  for (const Point& p : g.domain().points()) pts.push_back(point_to_json(p));
  out["points"] = pts;
  json edges = json::array();
  for (std::size_t i = 0; i < g.domain().size(); ++i)
    for (std::uint32_t j2 : g.adjacent_indices(i))
      edges.push_back(json::array({i, j2}));
  out["edges"] = edges;
  return out;
}

DownwardGraph graph_from_json(const json& j) {
  expect_keys(j, {"k", "points", "edges"}, "graph");
  json dom_j;
  dom_j["k"] = j.at("k");
  dom_j["points"] = j.at("points");
  auto dom = domain_from_json(dom_j);
  std::vector<std::vector<std::uint32_t>> adj(dom->size());
  std::uint64_t count = 0;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw ConfigError("graph: edge must be an index pair");
    std::uint64_t a = uint_from_json(e[0], "edge index");
    std::uint64_t b = uint_from_json(e[1], "edge index");
    if (a >= dom->size() || b >= dom->size())
      throw ConfigError("graph: edge index out of range");
    adj[a].push_back(static_cast<std::uint32_t>(b));
    ++count;
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return DownwardGraph(std::move(dom), std::move(adj), count);
}

json labeling_to_json(const Labeling& l) {
  json values = json::array();
  json phi = json::array();
  for (std::size_t i = 0; i < l.domain().size(); ++i) {
    values.push_back(json::array({point_to_json(l.domain().point(i)), l.value_index(i)}));
    phi.push_back(json::array({point_to_json(l.domain().point(i)), l.phi_empty_index(i)}));
  }
  json out;
  out["values"] = values;
  out["phiEmpty"] = phi;
  return out;
}

Labeling labeling_from_json(const json& j) {
  expect_keys(j, {"values", "phiEmpty"}, "labeling");
  std::vector<Point> pts;
  std::vector<std::pair<Point, std::uint64_t>> vals;
  for (const json& row : j.at("values")) {
    if (!row.is_array() || row.size() != 2)
      throw ConfigError("labeling: value row must be [point, value]");
    Point p = point_from_json(row[0]);
    vals.emplace_back(p, uint_from_json(row[1], "labeling value"));
    pts.push_back(std::move(p));
  }
  auto dom = std::make_shared<Domain>(pts);
  if (dom->size() != vals.size())
    throw ConfigError("labeling: duplicate points in values");
  std::vector<std::uint64_t> values(dom->size());
  std::vector<char> phi(dom->size(), 0);
  for (auto& [p, v] : vals) values[*dom->index_of(p)] = v;
  for (const json& row : j.at("phiEmpty")) {
    if (!row.is_array() || row.size() != 2 || !row[1].is_boolean())
      throw ConfigError("labeling: phiEmpty row must be [point, bool]");
    auto idx = dom->index_of(point_from_json(row[0]));
    if (!idx) throw ConfigError("labeling: phiEmpty point not in values");
    phi[*idx] = row[1].get<bool>() ? 1 : 0;
  }
  return Labeling(std::move(dom), std::move(values), std::move(phi));
}

json regularity_report_to_json(const RegularityReport& r) {
  json out;
  out["E"] = r.cube.base();
  out["regular"] = r.regular;
  json classes = json::array();
  for (const ClassReport& c : r.classes) {
    json cls;
    cls["ranks"] = c.type.ranks;
    switch (c.kind) {
      case ClassCase::ConstantBelowMin:
        cls["case"] = "const";
        cls["value"] = *c.constant;
        break;
      case ClassCase::MinDominant:
        cls["case"] = "minDom";
        break;
      case ClassCase::Neither: {
        cls["case"] = "neither";
        json w = json::array();
        for (const Point& p : c.witnesses) w.push_back(point_to_json(p));
        cls["witnesses"] = w;
        break;
      }
    }
    classes.push_back(cls);
  }
  out["classes"] = classes;
  out["regressiveValues"] = r.regressive_values;
  return out;
}

json instance_set_to_json(const InstanceSet& h) {
  json out;
  json d0 = json::array(), d1 = json::array(), d2 = json::array();
  json prov = json::array();
  for (const InstanceEntry& e : h.entries()) {
    (e.block == 0 ? d0 : e.block == 1 ? d1 : d2).push_back(e.value);
    prov.push_back(json::array({point_to_json(e.source), e.block, e.value}));
  }
  out["delta0"] = d0;
  out["delta1"] = d1;
  out["delta2"] = d2;
  out["provenance"] = prov;
  out["e0"] = h.min_e();
  return out;
}

InstanceSet instance_set_from_json(const json& j) {
  expect_keys(j, {"delta0", "delta1", "delta2", "provenance", "e0"}, "instances");
  if (!j.contains("e0")) throw ConfigError("instances: field 'e0' is required");
  std::uint64_t e0 = uint_from_json(j["e0"], "instances e0");
  std::vector<InstanceEntry> entries;
  if (j.contains("provenance")) {
    for (const json& row : j["provenance"]) {
      if (!row.is_array() || row.size() != 3)
        throw ConfigError("instances: provenance row must be [point, block, value]");
      InstanceEntry e;
      e.source = point_from_json(row[0]);
      e.block = row[1].get<int>();
      e.value = row[2].get<std::int64_t>();
      entries.push_back(std::move(e));
    }
  } else {
    for (int block : {0, 1, 2}) {
      const char* key = block == 0 ? "delta0" : block == 1 ? "delta1" : "delta2";
      if (!j.contains(key)) continue;
      for (const json& v : j[key])
        entries.push_back({v.get<std::int64_t>(), block, Point{}});
    }
  }
  InstanceSet out(std::move(entries), e0);
  // When both forms are present the delta lists must match the provenance.
  for (int block : {0, 1, 2}) {
    const char* key = block == 0 ? "delta0" : block == 1 ? "delta1" : "delta2";
    if (!j.contains(key)) continue;
    std::vector<std::int64_t> listed;
    for (const json& v : j[key]) listed.push_back(v.get<std::int64_t>());
    std::sort(listed.begin(), listed.end());
    std::vector<std::int64_t> actual = out.delta(block);
    std::sort(actual.begin(), actual.end());
    if (listed != actual)
      throw ConfigError(std::string("instances: ") + key +
                        " disagrees with provenance");
  }
  return out;
}

json solve_result_to_json(const SolveResult& r, const InstanceSet& h) {
  json out;
  out["solvable"] = r.solvable;
  json cert = json::array();
  for (std::size_t i : r.certificate) {
    const InstanceEntry& e = h.entries()[i];
    cert.push_back(json::array({point_to_json(e.source), e.block, e.value}));
  }
  out["certificate"] = cert;
  out["comparisons"] = r.comparisons;
  return out;
}

}  // namespace reglat
