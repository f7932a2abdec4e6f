#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "reglat/lattice.hpp"

namespace reglat {

// A named pair predicate. Every constructed edge additionally satisfies the
// downward condition max(x) > max(y): in strict mode a raw rule claiming an
// upward or level pair is a construction error; otherwise such pairs are
// dropped.
struct EdgeRule {
  std::string name;
  std::function<bool(const Point&, const Point&)> raw;
  bool strict = false;
};

EdgeRule edgeless_rule();
EdgeRule full_downward_rule();
// Edge iff x strictly dominates y coordinatewise (the downward conjunct is
// implied for distinct points but still enforced).
EdgeRule coordinate_dominance_rule();
// Each downward-compatible ordered pair is included independently with
// probability q, decided by a hash of (x, y, seed).
EdgeRule seeded_random_rule(double q, std::uint64_t seed);
// Exactly the listed pairs.
EdgeRule explicit_rule(std::vector<std::pair<Point, Point>> edges, bool strict = false);

// Immutable directed graph on a domain with the downward edge invariant.
// Adjacency is precomputed at build time; domains are desk scale.
class DownwardGraph {
 public:
  DownwardGraph(std::shared_ptr<const Domain> dom,
                std::vector<std::vector<std::uint32_t>> adjacency,
                std::uint64_t edge_count);

  const Domain& domain() const { return *dom_; }
  const std::shared_ptr<const Domain>& domain_ptr() const { return dom_; }

  // Out-neighbor indices of the i-th point, ascending.
  const std::vector<std::uint32_t>& adjacent_indices(std::size_t i) const {
    return adj_[i];
  }
  bool is_terminal(std::size_t i) const { return adj_[i].empty(); }
  std::uint64_t edge_count() const { return edge_count_; }

 private:
  std::shared_ptr<const Domain> dom_;
  std::vector<std::vector<std::uint32_t>> adj_;
  std::uint64_t edge_count_ = 0;
};

// Induced subgraph on D under the rule. Throws std::invalid_argument when a
// strict rule claims a non-downward pair.
DownwardGraph build_induced(const EdgeRule& rule, std::shared_ptr<const Domain> dom);

// Out-neighbors of z. Throws std::invalid_argument when z is not a vertex.
std::vector<Point> adjacency(const DownwardGraph& g, const Point& z);

// All vertices with no out-neighbors; always includes the lowest layer.
std::vector<Point> terminal_vertices(const DownwardGraph& g);

}  // namespace reglat
