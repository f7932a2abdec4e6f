#include "reglat/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "reglat/error.hpp"

namespace reglat {

std::uint64_t Point::max_coord() const {
  if (coords.empty()) throw std::invalid_argument("max_coord: empty point");
  return *std::max_element(coords.begin(), coords.end());
}

std::uint64_t Point::min_coord() const {
  if (coords.empty()) throw std::invalid_argument("min_coord: empty point");
  return *std::min_element(coords.begin(), coords.end());
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) os << ',';
    os << p.coords[i];
  }
  os << ')';
  return os.str();
}

OrderType rank_vector(const Point& x) {
  if (x.coords.empty()) throw std::invalid_argument("rank_vector: empty point");
  std::vector<std::uint64_t> distinct(x.coords);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  OrderType t;
  t.ranks.reserve(x.coords.size());
  for (std::uint64_t c : x.coords) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), c);
    t.ranks.push_back(static_cast<std::uint64_t>(it - distinct.begin()));
  }
  return t;
}

bool order_equivalent(const Point& x, const Point& y) {
  if (x.arity() != y.arity())
    throw std::invalid_argument("order_equivalent: arity mismatch");
  return rank_vector(x) == rank_vector(y);
}

std::vector<OrderType> enumerate_order_types(std::size_t k, std::size_t k_cap) {
  if (k < 1) throw std::invalid_argument("enumerate_order_types: k must be >= 1");
  if (k > k_cap)
    throw BudgetExceeded("enumerate_order_types: k exceeds configured cap");
  // Every class has a representative with coordinates below k, so
  // canonicalizing {0..k-1}^k and deduplicating covers all of them.
  std::set<OrderType> seen;
  std::vector<std::uint64_t> tuple(k, 0);
  while (true) {
    seen.insert(rank_vector(Point(tuple)));
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++tuple[i] < k) break;
      tuple[i] = 0;
      if (i == 0) return {seen.begin(), seen.end()};
    }
  }
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
  return acc;
}

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) acc *= base;
  return acc;
}

}  // namespace

std::uint64_t surjection_count(std::uint64_t k, std::uint64_t j) {
  if (j == 0 || j > k) return 0;
  if (k > 15) throw BudgetExceeded("surjection_count: k too large for exact 64-bit arithmetic");
  // Inclusion-exclusion over the j target elements missed.
  std::int64_t acc = 0;
  for (std::uint64_t i = 0; i <= j; ++i) {
    std::int64_t term = static_cast<std::int64_t>(binomial(j, i) * ipow(j - i, k));
    acc += (i % 2 == 0) ? term : -term;
  }
  return static_cast<std::uint64_t>(acc);
}

Domain::Domain(std::vector<Point> points) {
  if (points.empty())
    throw std::invalid_argument("Domain: point set must be nonempty");
  k_ = points.front().arity();
  if (k_ < 1) throw std::invalid_argument("Domain: arity must be >= 1");
  for (const Point& p : points) {
    if (p.arity() != k_)
      throw std::invalid_argument("Domain: mixed arities rejected");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  points_ = std::move(points);
  std::set<std::uint64_t> field;
  for (const Point& p : points_) field.insert(p.coords.begin(), p.coords.end());
  field_.assign(field.begin(), field.end());
}

bool Domain::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::optional<std::size_t> Domain::index_of(const Point& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

bool Domain::contains_cube(const Cube& e) const {
  if (e.arity() != k_) return false;
  for (const Point& p : e.points())
    if (!contains(p)) return false;
  return true;
}

std::vector<Layer> layers(const Domain& d) {
  std::vector<Layer> out;
  for (const Point& p : d.points()) {
    std::uint64_t m = p.max_coord();
    auto it = std::find_if(out.begin(), out.end(),
                           [m](const Layer& l) { return l.max_value == m; });
    if (it == out.end()) {
      out.push_back(Layer{m, {p}});
    } else {
      it->points.push_back(p);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Layer& a, const Layer& b) { return a.max_value < b.max_value; });
  return out;
}

Cube::Cube(std::vector<std::uint64_t> base, std::size_t k) : base_(std::move(base)), k_(k) {
  if (k_ < 1) throw std::invalid_argument("Cube: arity must be >= 1");
  if (base_.empty()) throw std::invalid_argument("Cube: base set must be nonempty");
  std::sort(base_.begin(), base_.end());
  if (std::adjacent_find(base_.begin(), base_.end()) != base_.end())
    throw std::invalid_argument("Cube: base values must be distinct");
  if (point_count() > 1'000'000)
    throw BudgetExceeded("Cube: p^k beyond enumeration budget");
}

std::size_t Cube::point_count() const {
  std::size_t acc = 1;
  for (std::size_t i = 0; i < k_; ++i) {
    if (acc > 1'000'000) return acc;
    acc *= base_.size();
  }
  return acc;
}

std::vector<Point> Cube::points() const {
  std::vector<Point> out;
  out.reserve(point_count());
  std::vector<std::size_t> odo(k_, 0);
  while (true) {
    std::vector<std::uint64_t> coords(k_);
    for (std::size_t i = 0; i < k_; ++i) coords[i] = base_[odo[i]];
    out.emplace_back(std::move(coords));
    std::size_t i = k_;
    while (i > 0) {
      --i;
      if (++odo[i] < base_.size()) break;
      odo[i] = 0;
      if (i == 0) return out;
    }
  }
}

bool Cube::contains(const Point& p) const {
  if (p.arity() != k_) return false;
  for (std::uint64_t c : p.coords)
    if (!std::binary_search(base_.begin(), base_.end(), c)) return false;
  return true;
}

SetMax set_max(const Domain& d) {
  SetMax r;
  for (const Point& p : d.points()) r.max_value = std::max(r.max_value, p.max_coord());
  for (const Point& p : d.points())
    if (p.max_coord() == r.max_value) r.witnesses.push_back(p);
  return r;
}

SetMax set_max(const Cube& e) {
  SetMax r;
  r.max_value = e.max_value();
  for (const Point& p : e.points())
    if (p.max_coord() == r.max_value) r.witnesses.push_back(p);
  return r;
}

bool is_capped_by(const Domain& d, const Cube& e) {
  if (!d.contains_cube(e))
    throw std::invalid_argument("is_capped_by: cube not contained in domain");
  return set_max(d).witnesses == set_max(e).witnesses;
}

Domain cap_restrict(const Domain& d, const Cube& e) {
  if (!d.contains_cube(e))
    throw std::invalid_argument("cap_restrict: cube not contained in domain");
  std::uint64_t top = e.max_value();
  std::vector<Point> kept;
  for (const Point& p : d.points())
    if (p.max_coord() < top) kept.push_back(p);
  for (Point& p : set_max(e).witnesses) kept.push_back(std::move(p));
  return Domain(std::move(kept));
}

std::optional<Cube> cap_of(const Domain& d) {
  SetMax top = set_max(d);
  std::set<std::uint64_t> vals;
  for (const Point& p : top.witnesses)
    vals.insert(p.coords.begin(), p.coords.end());
  std::vector<std::uint64_t> base(vals.begin(), vals.end());
  if (base.empty()) return std::nullopt;
  Cube e(base, d.arity());
  if (!d.contains_cube(e)) return std::nullopt;
  if (set_max(d).witnesses != set_max(e).witnesses) return std::nullopt;
  return e;
}

}  // namespace reglat
