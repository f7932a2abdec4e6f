#include "reglat/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "reglat/rng.hpp"

namespace reglat {

EdgeRule edgeless_rule() {
  return {"edgeless", [](const Point&, const Point&) { return false; }, false};
}

EdgeRule full_downward_rule() {
  return {"full-downward",
          [](const Point& x, const Point& y) { return x.max_coord() > y.max_coord(); },
          false};
}

EdgeRule coordinate_dominance_rule() {
  return {"coordinate-dominance",
          [](const Point& x, const Point& y) {
            for (std::size_t i = 0; i < x.arity(); ++i)
              if (x.coords[i] <= y.coords[i]) return false;
            return x.max_coord() > y.max_coord();
          },
          false};
}

namespace {

std::uint64_t pair_hash(const Point& x, const Point& y, std::uint64_t seed) {
  std::uint64_t h = mix64(seed);
  for (std::uint64_t c : x.coords) h = hash_combine(h, c);
  h = hash_combine(h, 0x5ca1ab1eull);
  for (std::uint64_t c : y.coords) h = hash_combine(h, c);
  return h;
}

}  // namespace

EdgeRule seeded_random_rule(double q, std::uint64_t seed) {
  return {"seeded-random",
          [q, seed](const Point& x, const Point& y) {
            if (x.max_coord() <= y.max_coord()) return false;
            return to_unit(pair_hash(x, y, seed)) < q;
          },
          false};
}

EdgeRule explicit_rule(std::vector<std::pair<Point, Point>> edges, bool strict) {
  auto set = std::make_shared<std::vector<std::pair<Point, Point>>>(std::move(edges));
  std::sort(set->begin(), set->end());
  return {"explicit",
          [set](const Point& x, const Point& y) {
            return std::binary_search(set->begin(), set->end(), std::make_pair(x, y));
          },
          strict};
}

DownwardGraph::DownwardGraph(std::shared_ptr<const Domain> dom,
                             std::vector<std::vector<std::uint32_t>> adjacency,
                             std::uint64_t edge_count)
    : dom_(std::move(dom)), adj_(std::move(adjacency)), edge_count_(edge_count) {
  if (adj_.size() != dom_->size())
    throw std::invalid_argument("DownwardGraph: adjacency size mismatch");
  for (std::size_t i = 0; i < adj_.size(); ++i) {
    for (std::uint32_t j : adj_[i]) {
      if (j >= dom_->size() ||
          dom_->point(i).max_coord() <= dom_->point(j).max_coord())
        throw std::invalid_argument("DownwardGraph: downward invariant violated");
    }
  }
}

DownwardGraph build_induced(const EdgeRule& rule, std::shared_ptr<const Domain> dom) {
  const std::size_t n = dom->size();
  std::vector<std::vector<std::uint32_t>> adj(n);
  std::uint64_t edges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& x = dom->point(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Point& y = dom->point(j);
      if (!rule.raw(x, y)) continue;
      if (x.max_coord() <= y.max_coord()) {
        if (rule.strict)
          throw std::invalid_argument(
              "build_induced: rule '" + rule.name + "' claims non-downward pair " +
              to_string(x) + " -> " + to_string(y));
        continue;  // non-strict: definitionally absent
      }
      adj[i].push_back(static_cast<std::uint32_t>(j));
      ++edges;
    }
  }
  return DownwardGraph(std::move(dom), std::move(adj), edges);
}

std::vector<Point> adjacency(const DownwardGraph& g, const Point& z) {
  auto idx = g.domain().index_of(z);
  if (!idx) throw std::invalid_argument("adjacency: point not in domain");
  std::vector<Point> out;
  for (std::uint32_t j : g.adjacent_indices(*idx)) out.push_back(g.domain().point(j));
  return out;
}

std::vector<Point> terminal_vertices(const DownwardGraph& g) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < g.domain().size(); ++i)
    if (g.is_terminal(i)) out.push_back(g.domain().point(i));
  return out;
}

}  // namespace reglat
