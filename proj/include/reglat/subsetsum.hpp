#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "reglat/regularity.hpp"

namespace reglat {

// One instance element with its block of origin and source point (empty
// coords for synthetic elements).
struct InstanceEntry {
  std::int64_t value = 0;
  int block = 2;  // 0, 1 or 2
  Point source;

  auto operator<=>(const InstanceEntry&) const = default;
};

// A multiset of integers split into the three blocks. Duplicate values are
// preserved; provenance disambiguates them. min_e anchors the positive-term
// exclusion window used by the structured solver.
class InstanceSet {
 public:
  InstanceSet(std::vector<InstanceEntry> entries, std::uint64_t min_e);

  const std::vector<InstanceEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::uint64_t min_e() const { return min_e_; }

  std::vector<std::int64_t> delta(int block) const;

 private:
  std::vector<InstanceEntry> entries_;  // sorted by (block, value, source)
  std::uint64_t min_e_ = 0;
};

struct SolveResult {
  bool solvable = false;
  std::vector<std::size_t> certificate;  // entry indices; empty iff unsolvable
  std::uint64_t comparisons = 0;
};

// True iff the distinct differences rho(x) - min(x) that land strictly
// inside (0, min(E) * k^k) over E^k number at most t * log2(p^k). Requires D
// capped by E^k.
bool is_tlog_bounded(const MinDominantRule& rho, const Domain& d, const Cube& e,
                     std::uint64_t t);

struct TlogDesignOptions {
  // Admit zero differences on E^k (zero sits outside the counted window but
  // makes every built instance trivially solvable).
  bool allow_zero_diffs = false;
};

// Deterministically (per seed) designs a min-dominant initializer whose
// small differences fill, but do not exceed, the t-log budget; all remaining
// E^k differences are distinct values at or above min(E) * k^k. Requires D
// capped by E^k.
std::shared_ptr<MinDominantRule> design_tlog_init(const Domain& d, const Cube& e,
                                                  std::uint64_t t, std::uint64_t seed,
                                                  const TlogDesignOptions& opt = {});

// Per-point integer rule feeding the middle block.
using IntegerRule = std::function<std::int64_t(const Domain&, const Point&)>;

IntegerRule zero_integer_rule();
IntegerRule seeded_range_integer_rule(std::int64_t lo, std::int64_t hi,
                                      std::uint64_t seed);

// Builds the three blocks from the labeling's partition of E^k:
// block 0 holds h(x) - min(E) (negative), block 1 holds i_rule(D, x),
// block 2 holds rho(x) - min(x) (nonnegative).
InstanceSet build_instances(const Labeling& h, const MinDominantRule& rho,
                            const IntegerRule& i_rule, const Cube& e);

// Decides whether a nonempty sub-multiset sums to zero, by the structured
// procedure: a zero in block 2 is an immediate solution; positive terms at
// or above min_e * k^k are excluded (the negative mass cannot reach them);
// all subsets of negative terms are compared against all subsets of the
// remaining small positive terms. Throws SolverRefusal with a diagnosis when
// the instance does not conform (block 1 nonempty, too many negatives, a
// negative term outside [-min_e, -1], or more in-window positive terms than
// t * k * log2(p)).
SolveResult solve_structured(const InstanceSet& h, std::size_t k, std::uint64_t t,
                             std::size_t p);

// Generic zero-sum decision, meet-in-the-middle over all entries. No
// structural assumptions; budget-capped on element count.
SolveResult solve_oracle(const InstanceSet& h, std::size_t budget = 30);

bool certificate_sums_to_zero(const InstanceSet& h,
                              const std::vector<std::size_t>& certificate);

}  // namespace reglat
