#include "reglat/labelers.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "reglat/error.hpp"
#include "reglat/rng.hpp"

namespace reglat {

std::optional<std::uint64_t> SelectionRule::select(
    const Point& z, const std::vector<Report>& reports) const {
  if (reports.size() != arity_)
    throw std::invalid_argument("SelectionRule: report count mismatch");
  auto idx = choose_index(z, reports);
  if (!idx) return std::nullopt;
  if (*idx >= reports.size())
    throw std::logic_error("SelectionRule: chosen index out of range");
  return reports[*idx].value;
}

namespace {

class MinIndexSelection final : public SelectionRule {
 public:
  explicit MinIndexSelection(std::size_t r) : SelectionRule("min-index", r) {}

 protected:
  std::optional<std::size_t> choose_index(const Point&,
                                          const std::vector<Report>& reports) const override {
    std::size_t best = 0;
    for (std::size_t i = 1; i < reports.size(); ++i)
      if (reports[i].value < reports[best].value) best = i;
    return best;
  }
};

class FixedIndexSelection final : public SelectionRule {
 public:
  FixedIndexSelection(std::size_t r, std::size_t j)
      : SelectionRule("fixed-index", r), j_(j) {
    if (j_ >= r) throw std::invalid_argument("fixed-index: index beyond arity");
  }

 protected:
  std::optional<std::size_t> choose_index(const Point&,
                                          const std::vector<Report>&) const override {
    return j_;
  }

 private:
  std::size_t j_;
};

std::uint64_t invocation_hash(const Point& z, const std::vector<Report>& reports,
                              std::uint64_t seed) {
  std::uint64_t h = mix64(seed);
  for (std::uint64_t c : z.coords) h = hash_combine(h, c);
  for (const Report& r : reports) {
    h = hash_combine(h, 0xc0ffee ^ r.value);
    for (std::uint64_t c : r.vertex.coords) h = hash_combine(h, c);
  }
  return h;
}

class SeededChoiceSelection final : public SelectionRule {
 public:
  SeededChoiceSelection(std::size_t r, double q, std::uint64_t seed)
      : SelectionRule("seeded-choice", r), q_(q), seed_(seed) {}

 protected:
  std::optional<std::size_t> choose_index(const Point& z,
                                          const std::vector<Report>& reports) const override {
    std::uint64_t h = invocation_hash(z, reports, seed_);
    if (to_unit(h) >= q_) return std::nullopt;
    return static_cast<std::size_t>(mix64(h) % reports.size());
  }

 private:
  double q_;
  std::uint64_t seed_;
};

class TableSelection final : public SelectionRule {
 public:
  TableSelection(std::size_t r, std::vector<SelectionTableEntry> entries)
      : SelectionRule("table", r) {
    for (SelectionTableEntry& e : entries) {
      if (e.reports.size() != r)
        throw std::invalid_argument("table selection: entry arity mismatch");
      if (e.chosen_index >= r)
        throw std::invalid_argument("table selection: chosen index beyond arity");
      table_[{e.z, e.reports}] = e.chosen_index;
    }
  }

 protected:
  std::optional<std::size_t> choose_index(const Point& z,
                                          const std::vector<Report>& reports) const override {
    auto it = table_.find({z, reports});
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::map<std::pair<Point, std::vector<Report>>, std::size_t> table_;
};

}  // namespace

std::shared_ptr<SelectionRule> make_min_index_selection(std::size_t r) {
  return std::make_shared<MinIndexSelection>(r);
}

std::shared_ptr<SelectionRule> make_fixed_index_selection(std::size_t r, std::size_t j) {
  return std::make_shared<FixedIndexSelection>(r, j);
}

std::shared_ptr<SelectionRule> make_seeded_choice_selection(std::size_t r, double q,
                                                            std::uint64_t seed) {
  return std::make_shared<SeededChoiceSelection>(r, q, seed);
}

std::shared_ptr<SelectionRule> make_table_selection(std::size_t r,
                                                    std::vector<SelectionTableEntry> entries) {
  return std::make_shared<TableSelection>(r, std::move(entries));
}

std::vector<std::uint64_t> MinDominantRule::materialize(const Domain& d) const {
  std::vector<std::uint64_t> out;
  out.reserve(d.size());
  for (const Point& x : d.points()) {
    std::uint64_t v = value(d, x);
    if (v < x.min_coord())
      throw std::invalid_argument("initializer '" + name() +
                                  "' violates min dominance at " + to_string(x));
    out.push_back(v);
  }
  return out;
}

namespace {

class MinInit final : public MinDominantRule {
 public:
  MinInit() : MinDominantRule("min") {}
  std::uint64_t value(const Domain&, const Point& x) const override {
    return x.min_coord();
  }
};

class MaxInit final : public MinDominantRule {
 public:
  MaxInit() : MinDominantRule("max") {}
  std::uint64_t value(const Domain&, const Point& x) const override {
    return x.max_coord();
  }
};

class OffsetTableInit final : public MinDominantRule {
 public:
  explicit OffsetTableInit(std::vector<std::pair<Point, std::uint64_t>> offsets)
      : MinDominantRule("min-plus-offset-table"),
        offsets_(offsets.begin(), offsets.end()) {}
  std::uint64_t value(const Domain&, const Point& x) const override {
    auto it = offsets_.find(x);
    return x.min_coord() + (it == offsets_.end() ? 0 : it->second);
  }

 private:
  std::map<Point, std::uint64_t> offsets_;
};

class SeededOffsetInit final : public MinDominantRule {
 public:
  SeededOffsetInit(std::uint64_t max_offset, std::uint64_t seed)
      : MinDominantRule("seeded-offset"), max_offset_(max_offset), seed_(seed) {}
  std::uint64_t value(const Domain&, const Point& x) const override {
    std::uint64_t h = mix64(seed_);
    for (std::uint64_t c : x.coords) h = hash_combine(h, c);
    return x.min_coord() + h % (max_offset_ + 1);
  }

 private:
  std::uint64_t max_offset_;
  std::uint64_t seed_;
};

class PointTableInit final : public MinDominantRule {
 public:
  PointTableInit(std::string name, std::map<Point, std::uint64_t> table)
      : MinDominantRule(std::move(name)), table_(std::move(table)) {}
  std::uint64_t value(const Domain&, const Point& x) const override {
    auto it = table_.find(x);
    return it == table_.end() ? x.min_coord() : it->second;
  }

 private:
  std::map<Point, std::uint64_t> table_;
};

}  // namespace

std::shared_ptr<MinDominantRule> make_min_init() { return std::make_shared<MinInit>(); }
std::shared_ptr<MinDominantRule> make_max_init() { return std::make_shared<MaxInit>(); }

std::shared_ptr<MinDominantRule> make_offset_table_init(
    std::vector<std::pair<Point, std::uint64_t>> offsets) {
  return std::make_shared<OffsetTableInit>(std::move(offsets));
}

std::shared_ptr<MinDominantRule> make_seeded_offset_init(std::uint64_t max_offset,
                                                         std::uint64_t seed) {
  return std::make_shared<SeededOffsetInit>(max_offset, seed);
}

std::shared_ptr<MinDominantRule> make_point_table_init(
    std::string name, std::map<Point, std::uint64_t> table) {
  return std::make_shared<PointTableInit>(std::move(name), std::move(table));
}

Labeling::Labeling(std::shared_ptr<const Domain> dom, std::vector<std::uint64_t> values,
                   std::vector<char> phi_empty,
                   std::vector<std::vector<std::uint64_t>> phi_values)
    : dom_(std::move(dom)),
      values_(std::move(values)),
      phi_empty_(std::move(phi_empty)),
      phi_values_(std::move(phi_values)) {
  if (values_.size() != dom_->size() || phi_empty_.size() != dom_->size())
    throw std::invalid_argument("Labeling: size mismatch with domain");
  if (!phi_values_.empty() && phi_values_.size() != dom_->size())
    throw std::invalid_argument("Labeling: phi value set size mismatch");
}

Labeling Labeling::from_values(std::shared_ptr<const Domain> dom,
                               std::vector<std::uint64_t> values) {
  std::vector<char> flags(dom->size(), 0);
  return Labeling(std::move(dom), std::move(values), std::move(flags));
}

std::uint64_t Labeling::value_at(const Point& z) const {
  auto idx = dom_->index_of(z);
  if (!idx) throw std::invalid_argument("Labeling: point not in domain");
  return values_[*idx];
}

bool Labeling::phi_empty_at(const Point& z) const {
  auto idx = dom_->index_of(z);
  if (!idx) throw std::invalid_argument("Labeling: point not in domain");
  return phi_empty_[*idx] != 0;
}

const std::vector<std::uint64_t>* Labeling::phi_values_index(std::size_t i) const {
  if (phi_values_.empty()) return nullptr;
  return &phi_values_[i];
}

Labeling terminal_labeling(const DownwardGraph& g) {
  const Domain& d = g.domain();
  const std::size_t n = d.size();
  // Vertices sorted by max coordinate: every edge target precedes its source.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return d.point(a).max_coord() < d.point(b).max_coord();
  });

  // reach_min[i]: least min coordinate over terminal vertices reachable from
  // i (i itself included when terminal). Every path in a finite downward
  // graph extends to a terminal one, so this aggregates exactly the last
  // vertices of terminal paths.
  std::vector<std::uint64_t> reach_min(n, 0), values(n, 0);
  std::vector<char> phi_empty(n, 0);
  for (std::size_t i : order) {
    const Point& z = d.point(i);
    if (g.is_terminal(i)) {
      reach_min[i] = z.min_coord();
      values[i] = z.max_coord();
      phi_empty[i] = 1;
    } else {
      std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
      for (std::uint32_t c : g.adjacent_indices(i)) best = std::min(best, reach_min[c]);
      reach_min[i] = best;
      values[i] = best;
      phi_empty[i] = 0;
    }
  }
  return Labeling(g.domain_ptr(), std::move(values), std::move(phi_empty));
}

namespace {

// Shared committee recursion; `initial` supplies the value taken when no
// selection is defined at a vertex.
Labeling committee_recursion(const DownwardGraph& g, const SelectionRule& f,
                             const std::function<std::uint64_t(std::size_t)>& initial,
                             const LabelOptions& opt) {
  const Domain& d = g.domain();
  const std::size_t n = d.size();
  const std::size_t r = f.arity();
  if (r < 1) throw std::invalid_argument("committee recursion: arity must be >= 1");

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return d.point(a).max_coord() < d.point(b).max_coord();
  });
  if (opt.process_shuffle_seed != 0) {
    // Permute within layers only; values depend on strictly lower layers, so
    // the result must be identical.
    RandomSource rs(opt.process_shuffle_seed);
    std::size_t lo = 0;
    while (lo < n) {
      std::size_t hi = lo + 1;
      while (hi < n && d.point(order[hi]).max_coord() == d.point(order[lo]).max_coord())
        ++hi;
      for (std::size_t i = hi - 1; i > lo; --i)
        std::swap(order[lo + rs.below(i - lo + 1)], order[i]);
      lo = hi;
    }
  }

  std::vector<std::uint64_t> values(n, 0);
  std::vector<char> phi_empty(n, 0);
  std::vector<std::vector<std::uint64_t>> phi_values;
  if (opt.keep_phi_values) phi_values.resize(n);

  std::vector<Report> reports(r);
  for (std::size_t i : order) {
    const Point& z = d.point(i);
    const auto& adj = g.adjacent_indices(i);
    bool any_defined = false;
    std::uint64_t best = 0;
    if (!adj.empty()) {
      // Tuple budget: |adjacency|^r, checked before enumeration.
      std::uint64_t tuples = 1;
      for (std::size_t e = 0; e < r; ++e) {
        tuples *= adj.size();
        if (tuples > opt.tuple_cap)
          throw BudgetExceeded("committee tuple budget exceeded at " + to_string(z));
      }
      std::vector<std::size_t> odo(r, 0);
      while (true) {
        for (std::size_t s = 0; s < r; ++s) {
          std::uint32_t child = adj[odo[s]];
          const Point& y = d.point(child);
          reports[s].vertex = y;
          // An empty-committee member reports its min coordinate, whatever
          // its own label was initialized to.
          reports[s].value = phi_empty[child] ? y.min_coord() : values[child];
        }
        if (auto v = f.select(z, reports)) {
          if (!any_defined || *v < best) best = *v;
          any_defined = true;
          if (opt.keep_phi_values) phi_values[i].push_back(*v);
        }
        std::size_t s = r;
        bool done = false;
        while (s > 0) {
          --s;
          if (++odo[s] < adj.size()) break;
          odo[s] = 0;
          if (s == 0) done = true;
        }
        if (done) break;
      }
    }
    if (any_defined) {
      values[i] = best;
      phi_empty[i] = 0;
    } else {
      values[i] = initial(i);
      phi_empty[i] = 1;
    }
    if (opt.keep_phi_values) {
      auto& pv = phi_values[i];
      std::sort(pv.begin(), pv.end());
      pv.erase(std::unique(pv.begin(), pv.end()), pv.end());
    }
  }
  return Labeling(g.domain_ptr(), std::move(values), std::move(phi_empty),
                  std::move(phi_values));
}

}  // namespace

Labeling committee_labeling(const DownwardGraph& g, const SelectionRule& f,
                            const LabelOptions& opt) {
  const Domain& d = g.domain();
  return committee_recursion(
      g, f, [&d](std::size_t i) { return d.point(i).max_coord(); }, opt);
}

Labeling initialized_labeling(const DownwardGraph& g, const SelectionRule& f,
                              const MinDominantRule& rho, const LabelOptions& opt) {
  std::vector<std::uint64_t> init = rho.materialize(g.domain());
  return committee_recursion(
      g, f, [&init](std::size_t i) { return init[i]; }, opt);
}

SelectionCheck validate_selection(const SelectionRule& f,
                                  const std::vector<SelectionInvocation>& samples) {
  SelectionCheck out;
  for (const SelectionInvocation& call : samples) {
    auto v = f.select(call.z, call.reports);
    if (!v) continue;
    bool member = false;
    for (const Report& r : call.reports)
      if (r.value == *v) member = true;
    if (!member) {
      out.ok = false;
      out.violations.push_back({call, *v});
    }
  }
  return out;
}

}  // namespace reglat
