#include "reglat/regularity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "reglat/error.hpp"

namespace reglat {

std::vector<std::uint64_t> regressive_values(const Labeling& f,
                                             const std::vector<Point>& xs) {
  std::set<std::uint64_t> vals;
  for (const Point& x : xs) {
    std::uint64_t v = f.value_at(x);
    if (v < x.min_coord()) vals.insert(v);
  }
  return {vals.begin(), vals.end()};
}

RegularityReport check_regularity(const Labeling& f, const Cube& e,
                                  std::size_t witness_cap) {
  if (!f.domain().contains_cube(e))
    throw std::invalid_argument("check_regularity: cube not contained in domain");

  std::vector<Point> cube_points = e.points();
  std::map<OrderType, std::vector<Point>> classes;
  for (const Point& x : cube_points) classes[rank_vector(x)].push_back(x);

  RegularityReport report{e, {}, regressive_values(f, cube_points), true};
  const std::uint64_t min_e = e.min_value();
  for (auto& [type, members] : classes) {
    ClassReport cr;
    cr.type = type;
    bool constant = true;
    std::uint64_t first = f.value_at(members.front());
    bool min_dominant = true;
    for (const Point& x : members) {
      std::uint64_t v = f.value_at(x);
      if (v != first) constant = false;
      if (v < x.min_coord()) min_dominant = false;
    }
    if (constant && first < min_e) {
      cr.kind = ClassCase::ConstantBelowMin;
      cr.constant = first;
    } else if (min_dominant) {
      cr.kind = ClassCase::MinDominant;
    } else {
      cr.kind = ClassCase::Neither;
      report.regular = false;
      for (const Point& x : members) {
        if (cr.witnesses.size() >= witness_cap) break;
        if (f.value_at(x) < x.min_coord()) cr.witnesses.push_back(x);
      }
    }
    report.classes.push_back(std::move(cr));
  }
  return report;
}

BlockPartition partition_blocks(const Labeling& f, const Cube& e) {
  if (!f.domain().contains_cube(e))
    throw std::invalid_argument("partition_blocks: cube not contained in domain");
  BlockPartition out;
  const std::uint64_t min_e = e.min_value();
  for (const Point& x : e.points()) {
    std::uint64_t v = f.value_at(x);
    if (v < min_e) {
      out.e0.push_back(x);
    } else if (v < x.min_coord()) {
      out.e1.push_back(x);
    } else {
      out.e2.push_back(x);
    }
  }
  return out;
}

namespace {

// Colexicographic successor of a p-combination over {0..n-1}; false when the
// last combination was reached.
bool next_colex(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t p = c.size();
  for (std::size_t i = 0; i < p; ++i) {
    std::size_t limit = (i + 1 < p) ? c[i + 1] : n;
    if (c[i] + 1 < limit) {
      ++c[i];
      for (std::size_t j = 0; j < i; ++j) c[j] = j;
      return true;
    }
  }
  return false;
}

}  // namespace

CubeSearchResult find_regular_cube(const LabelingFamily& family,
                                   std::shared_ptr<const Domain> d, std::size_t p,
                                   std::uint64_t candidate_cap,
                                   std::size_t failure_cap) {
  if (p < 2) throw std::invalid_argument("find_regular_cube: p must be >= 2");
  CubeSearchResult result;
  const std::vector<std::uint64_t>& field = d->field();
  if (field.size() < p) return result;  // exhaustion, zero candidates

  // The family member is fixed by D; evaluate once across all candidates.
  Labeling f = family(d);

  std::vector<std::size_t> comb(p);
  for (std::size_t i = 0; i < p; ++i) comb[i] = i;
  do {
    if (++result.subsets_seen > candidate_cap)
      throw BudgetExceeded("find_regular_cube: candidate budget exceeded");
    std::vector<std::uint64_t> base(p);
    for (std::size_t i = 0; i < p; ++i) base[i] = field[comb[i]];
    Cube e(base, d->arity());
    if (!d->contains_cube(e)) continue;
    ++result.candidates;
    RegularityReport report = check_regularity(f, e);
    if (report.regular) {
      result.found = {e, std::move(report)};
      return result;
    }
    if (result.failures.size() < failure_cap) {
      std::size_t neither = 0;
      for (const ClassReport& c : report.classes)
        if (c.kind == ClassCase::Neither) ++neither;
      result.failures.push_back({base, neither});
    }
  } while (next_colex(comb, field.size()));
  return result;
}

JumpFreeResult jump_free_check(const Labeling& fa, const Labeling& fb) {
  JumpFreeResult out;
  const Domain& a = fa.domain();
  const Domain& b = fb.domain();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Point& x = a.point(i);
    if (!b.contains(x)) continue;
    // A_x contained in B_x with equal labels; both conditions checked, never
    // assumed.
    bool antecedent = true;
    const std::uint64_t mx = x.max_coord();
    for (std::size_t j = 0; j < a.size() && antecedent; ++j) {
      const Point& z = a.point(j);
      if (z.max_coord() >= mx) continue;
      if (!b.contains(z) || fa.value_index(j) != fb.value_at(z)) antecedent = false;
    }
    if (!antecedent) continue;
    ++out.checked;
    std::uint64_t va = fa.value_index(i);
    std::uint64_t vb = fb.value_at(x);
    if (va < vb) {
      out.holds = false;
      out.witnesses.push_back({x, va, vb});
    }
  }
  return out;
}

}  // namespace reglat
