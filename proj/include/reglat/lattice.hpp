#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace reglat {

// A lattice point: a k-tuple of nonnegative integers, k >= 1.
struct Point {
  std::vector<std::uint64_t> coords;

  Point() = default;
  explicit Point(std::vector<std::uint64_t> c) : coords(std::move(c)) {}
  Point(std::initializer_list<std::uint64_t> c) : coords(c) {}

  std::size_t arity() const { return coords.size(); }
  std::uint64_t max_coord() const;
  std::uint64_t min_coord() const;

  auto operator<=>(const Point&) const = default;
};

std::string to_string(const Point& p);

// Canonical representative of an order-equivalence class: the rank of each
// coordinate within the point's set of distinct values. Rank vectors are
// themselves valid points, and canonicalization is idempotent.
struct OrderType {
  std::vector<std::uint64_t> ranks;
  auto operator<=>(const OrderType&) const = default;
};

OrderType rank_vector(const Point& x);

// True iff the two tuples realize the same <, = pattern pairwise.
// Throws std::invalid_argument on arity mismatch.
bool order_equivalent(const Point& x, const Point& y);

// All canonical rank vectors of arity k, sorted. Enumeration is capped;
// k beyond the cap is refused (BudgetExceeded).
std::vector<OrderType> enumerate_order_types(std::size_t k, std::size_t k_cap = 4);

// Number of surjections from a k-set onto a j-set; 0 when j > k or j == 0.
// Exact 64-bit integer arithmetic (inclusion-exclusion).
std::uint64_t surjection_count(std::uint64_t k, std::uint64_t j);

class Cube;

// A finite nonempty set of points of common arity. Points are kept sorted
// lexicographically (the canonical ordering used by every serializer).
// Mixed arities are rejected, not coerced.
class Domain {
 public:
  explicit Domain(std::vector<Point> points);

  std::size_t arity() const { return k_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& point(std::size_t i) const { return points_[i]; }

  bool contains(const Point& p) const;
  // Index into the canonical ordering, if present.
  std::optional<std::size_t> index_of(const Point& p) const;

  // Sorted distinct coordinate values over all points.
  const std::vector<std::uint64_t>& field() const { return field_; }

  bool contains_cube(const Cube& e) const;

  bool operator==(const Domain& other) const { return points_ == other.points_; }

 private:
  std::size_t k_ = 0;
  std::vector<Point> points_;
  std::vector<std::uint64_t> field_;
};

// One slot of the max-layer decomposition: all points whose maximum
// coordinate equals max_value.
struct Layer {
  std::uint64_t max_value;
  std::vector<Point> points;
};

// Layer values strictly increasing; the slots partition the domain.
std::vector<Layer> layers(const Domain& d);

// The k-th Cartesian power of a base set E of p distinct values.
class Cube {
 public:
  Cube(std::vector<std::uint64_t> base, std::size_t k);

  const std::vector<std::uint64_t>& base() const { return base_; }
  std::size_t arity() const { return k_; }
  std::uint64_t min_value() const { return base_.front(); }
  std::uint64_t max_value() const { return base_.back(); }
  std::size_t point_count() const;  // p^k

  // All points of E^k in canonical (lexicographic) order.
  std::vector<Point> points() const;
  bool contains(const Point& p) const;

  bool operator==(const Cube& other) const {
    return k_ == other.k_ && base_ == other.base_;
  }

 private:
  std::vector<std::uint64_t> base_;
  std::size_t k_;
};

struct SetMax {
  std::uint64_t max_value = 0;
  std::vector<Point> witnesses;  // sorted; all points attaining max_value
};

SetMax set_max(const Domain& d);
SetMax set_max(const Cube& e);

// True iff setmax(D) = setmax(E^k). Requires E^k to be contained in D;
// containment is checked, never assumed.
bool is_capped_by(const Domain& d, const Cube& e);

// Keeps the part of D strictly below max(E) plus setmax(E^k). The result is
// capped by E^k and still contains E^k. Requires E^k contained in D.
Domain cap_restrict(const Domain& d, const Cube& e);

// Recovers E from setmax(D) when D is capped by some cube; nullopt otherwise.
std::optional<Cube> cap_of(const Domain& d);

}  // namespace reglat
