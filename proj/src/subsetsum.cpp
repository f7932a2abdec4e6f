#include "reglat/subsetsum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "reglat/error.hpp"
#include "reglat/rng.hpp"

namespace reglat {

namespace {

std::uint64_t self_power(std::size_t k) {
  if (k < 1 || k > 8)
    throw std::invalid_argument("self_power: k out of supported range");
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < k; ++i) acc *= k;
  return acc;
}

std::uint64_t point_hash(const Point& x, std::uint64_t seed) {
  std::uint64_t h = mix64(seed);
  for (std::uint64_t c : x.coords) h = hash_combine(h, c);
  return h;
}

}  // namespace

InstanceSet::InstanceSet(std::vector<InstanceEntry> entries, std::uint64_t min_e)
    : entries_(std::move(entries)), min_e_(min_e) {
  for (const InstanceEntry& e : entries_) {
    if (e.block < 0 || e.block > 2)
      throw std::invalid_argument("InstanceSet: block out of range");
    if (e.block == 0 && e.value >= 0)
      throw std::invalid_argument("InstanceSet: block 0 values must be negative");
    if (e.block == 2 && e.value < 0)
      throw std::invalid_argument("InstanceSet: block 2 values must be nonnegative");
  }
  std::sort(entries_.begin(), entries_.end());
}

std::vector<std::int64_t> InstanceSet::delta(int block) const {
  std::vector<std::int64_t> out;
  for (const InstanceEntry& e : entries_)
    if (e.block == block) out.push_back(e.value);
  return out;
}

bool is_tlog_bounded(const MinDominantRule& rho, const Domain& d, const Cube& e,
                     std::uint64_t t) {
  if (!is_capped_by(d, e))
    throw std::invalid_argument("is_tlog_bounded: domain not capped by cube");
  const std::uint64_t window = e.min_value() * self_power(e.arity());
  std::set<std::uint64_t> small;
  for (const Point& x : e.points()) {
    std::uint64_t diff = rho.value(d, x) - x.min_coord();
    if (diff > 0 && diff < window) small.insert(diff);
  }
  const double bound =
      static_cast<double>(t) * std::log2(std::pow(static_cast<double>(e.base().size()),
                                                  static_cast<double>(e.arity())));
  return static_cast<double>(small.size()) <= bound + 1e-9;
}

std::shared_ptr<MinDominantRule> design_tlog_init(const Domain& d, const Cube& e,
                                                  std::uint64_t t, std::uint64_t seed,
                                                  const TlogDesignOptions& opt) {
  if (!is_capped_by(d, e))
    throw std::invalid_argument("design_tlog_init: domain not capped by cube");
  const std::size_t k = e.arity();
  const std::uint64_t kk = self_power(k);
  const std::uint64_t window = e.min_value() * kk;
  const double bound =
      static_cast<double>(t) *
      std::log2(std::pow(static_cast<double>(e.base().size()), static_cast<double>(k)));
  std::size_t budget = static_cast<std::size_t>(bound + 1e-9);

  std::vector<Point> cube_points = e.points();
  RandomSource rs(hash_combine(seed, 0xd351617ull));

  // Choose which cube points carry the small differences; everything else
  // gets a distinct difference at or above the window.
  std::vector<std::size_t> idx(cube_points.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (std::size_t i = idx.size(); i > 1; --i)
    std::swap(idx[i - 1], idx[rs.below(i)]);

  std::size_t small_count = std::min(budget, cube_points.size());
  if (window <= 1) small_count = 0;  // window (0, w) empty or singleton-free

  std::set<std::uint64_t> small_diffs;
  while (small_diffs.size() < small_count && small_diffs.size() + 1 < window)
    small_diffs.insert(1 + rs.below(window - 1));
  std::vector<std::uint64_t> small_list(small_diffs.begin(), small_diffs.end());

  std::map<Point, std::uint64_t> table;
  std::uint64_t next_large = window;
  std::size_t small_used = 0;
  for (std::size_t i = 0; i < cube_points.size(); ++i) {
    const Point& x = cube_points[idx[i]];
    std::uint64_t diff;
    if (small_used < small_list.size()) {
      diff = small_list[small_used++];
    } else if (opt.allow_zero_diffs && rs.chance(0.25)) {
      diff = 0;
    } else {
      diff = next_large++;
    }
    table[x] = x.min_coord() + diff;
  }
  // Off-cube points are unconstrained by the bound; keep them min-dominant.
  for (const Point& x : d.points())
    if (!table.count(x)) table[x] = x.min_coord() + window + point_hash(x, seed) % kk;

  return make_point_table_init("tlog-designed", std::move(table));
}

IntegerRule zero_integer_rule() {
  return [](const Domain&, const Point&) -> std::int64_t { return 0; };
}

IntegerRule seeded_range_integer_rule(std::int64_t lo, std::int64_t hi,
                                      std::uint64_t seed) {
  if (lo > hi) throw std::invalid_argument("seeded_range_integer_rule: empty range");
  return [lo, hi, seed](const Domain&, const Point& x) -> std::int64_t {
    return lo + static_cast<std::int64_t>(point_hash(x, seed) %
                                          static_cast<std::uint64_t>(hi - lo + 1));
  };
}

InstanceSet build_instances(const Labeling& h, const MinDominantRule& rho,
                            const IntegerRule& i_rule, const Cube& e) {
  const Domain& d = h.domain();
  BlockPartition blocks = partition_blocks(h, e);
  std::vector<InstanceEntry> entries;
  entries.reserve(e.point_count());
  const std::int64_t min_e = static_cast<std::int64_t>(e.min_value());
  for (const Point& x : blocks.e0) {
    entries.push_back({static_cast<std::int64_t>(h.value_at(x)) - min_e, 0, x});
  }
  for (const Point& x : blocks.e1) {
    entries.push_back({i_rule(d, x), 1, x});
  }
  for (const Point& x : blocks.e2) {
    std::uint64_t diff = rho.value(d, x) - x.min_coord();
    entries.push_back({static_cast<std::int64_t>(diff), 2, x});
  }
  return InstanceSet(std::move(entries), e.min_value());
}

SolveResult solve_structured(const InstanceSet& h, std::size_t k, std::uint64_t t,
                             std::size_t p) {
  const std::uint64_t kk = self_power(k);
  const std::int64_t min_e = static_cast<std::int64_t>(h.min_e());
  const std::int64_t window = min_e * static_cast<std::int64_t>(kk);

  std::vector<std::size_t> negatives, small_positives;
  std::optional<std::size_t> zero_entry;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const InstanceEntry& e = h.entries()[i];
    if (e.block == 1)
      throw SolverRefusal("structured solver: block 1 nonempty (no regressively "
                          "regular configuration produces it)");
    if (e.block == 0) {
      if (e.value < -min_e)
        throw SolverRefusal("structured solver: negative term " +
                            std::to_string(e.value) + " below -min(E)");
      negatives.push_back(i);
    } else {
      if (e.value == 0 && !zero_entry) zero_entry = i;
      if (e.value > 0 && e.value < window) small_positives.push_back(i);
    }
  }
  if (negatives.size() >= kk)
    throw SolverRefusal("structured solver: " + std::to_string(negatives.size()) +
                        " negative terms, expected fewer than k^k = " +
                        std::to_string(kk));
  const double positive_budget =
      static_cast<double>(t) * static_cast<double>(k) * std::log2(static_cast<double>(p));
  if (static_cast<double>(small_positives.size()) > positive_budget + 1e-9)
    throw SolverRefusal("structured solver: " + std::to_string(small_positives.size()) +
                        " in-window positive terms exceed t*k*log2(p)");
  if (negatives.size() > 24 || small_positives.size() > 24)
    throw BudgetExceeded("structured solver: subset enumeration too large");

  SolveResult result;
  if (zero_entry) {
    result.solvable = true;
    result.certificate = {*zero_entry};
    return result;  // zero comparisons: the target itself is present
  }

  const std::size_t nn = negatives.size();
  const std::size_t np = small_positives.size();
  std::vector<std::int64_t> pos_sums(std::size_t{1} << np, 0);
  for (std::size_t m = 1; m < pos_sums.size(); ++m) {
    std::size_t low = static_cast<std::size_t>(std::countr_zero(m));
    pos_sums[m] = pos_sums[m & (m - 1)] + h.entries()[small_positives[low]].value;
  }

  for (std::size_t nm = 0; nm < (std::size_t{1} << nn); ++nm) {
    std::int64_t neg_sum = 0;
    for (std::size_t i = 0; i < nn; ++i)
      if (nm & (std::size_t{1} << i)) neg_sum += h.entries()[negatives[i]].value;
    for (std::size_t pm = 0; pm < pos_sums.size(); ++pm) {
      if (nm == 0 && pm == 0) continue;
      ++result.comparisons;
      if (neg_sum + pos_sums[pm] == 0) {
        result.solvable = true;
        for (std::size_t i = 0; i < nn; ++i)
          if (nm & (std::size_t{1} << i)) result.certificate.push_back(negatives[i]);
        for (std::size_t i = 0; i < np; ++i)
          if (pm & (std::size_t{1} << i))
            result.certificate.push_back(small_positives[i]);
        std::sort(result.certificate.begin(), result.certificate.end());
        return result;
      }
    }
  }
  return result;
}

SolveResult solve_oracle(const InstanceSet& h, std::size_t budget) {
  const std::size_t n = h.size();
  if (n > budget) throw BudgetExceeded("oracle solver: instance beyond size budget");

  SolveResult result;
  if (n == 0) return result;

  const std::size_t nl = n / 2;
  const std::size_t nr = n - nl;

  // Left-half subset sums, sorted; smallest mask wins among equal sums so the
  // outcome does not depend on sort internals.
  std::vector<std::pair<std::int64_t, std::uint32_t>> left;
  left.reserve(std::size_t{1} << nl);
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << nl); ++m) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < nl; ++i)
      if (m & (std::uint32_t{1} << i)) s += h.entries()[i].value;
    left.emplace_back(s, m);
  }
  std::sort(left.begin(), left.end());

  for (std::uint32_t m = 0; m < (std::uint32_t{1} << nr); ++m) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < nr; ++i)
      if (m & (std::uint32_t{1} << i)) s += h.entries()[nl + i].value;
    auto it = std::lower_bound(left.begin(), left.end(),
                               std::make_pair(-s, std::uint32_t{0}));
    for (; it != left.end() && it->first == -s; ++it) {
      if (m == 0 && it->second == 0) continue;  // nonempty subsets only
      result.solvable = true;
      for (std::size_t i = 0; i < nl; ++i)
        if (it->second & (std::uint32_t{1} << i)) result.certificate.push_back(i);
      for (std::size_t i = 0; i < nr; ++i)
        if (m & (std::uint32_t{1} << i)) result.certificate.push_back(nl + i);
      return result;
    }
  }
  return result;
}

bool certificate_sums_to_zero(const InstanceSet& h,
                              const std::vector<std::size_t>& certificate) {
  if (certificate.empty()) return false;
  std::int64_t s = 0;
  for (std::size_t i : certificate) {
    if (i >= h.size()) return false;
    s += h.entries()[i].value;
  }
  return s == 0;
}

}  // namespace reglat
