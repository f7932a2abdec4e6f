#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reglat/graph.hpp"

namespace reglat {

// One committee member's report: a vertex and the value it passes up.
struct Report {
  Point vertex;
  std::uint64_t value = 0;
  auto operator<=>(const Report&) const = default;
};

// Partially defined committee rule of fixed arity r. When defined, the
// result must equal one of its report values; implementations return an
// index, so the selection property holds by construction. Test doubles may
// override select() directly to model adversarial rules.
class SelectionRule {
 public:
  SelectionRule(std::string name, std::size_t arity)
      : name_(std::move(name)), arity_(arity) {}
  virtual ~SelectionRule() = default;

  const std::string& name() const { return name_; }
  std::size_t arity() const { return arity_; }

  virtual std::optional<std::uint64_t> select(
      const Point& z, const std::vector<Report>& reports) const;

 protected:
  // nullopt means undefined at this invocation.
  virtual std::optional<std::size_t> choose_index(
      const Point& z, const std::vector<Report>& reports) const = 0;

 private:
  std::string name_;
  std::size_t arity_;
};

// Selects the minimal report value, ties to the lowest index.
std::shared_ptr<SelectionRule> make_min_index_selection(std::size_t r);
// Always selects report j (0-based).
std::shared_ptr<SelectionRule> make_fixed_index_selection(std::size_t r, std::size_t j);
// Defined with probability q per invocation (hash of z, reports, seed);
// when defined, a hash-chosen index.
std::shared_ptr<SelectionRule> make_seeded_choice_selection(std::size_t r, double q,
                                                            std::uint64_t seed);

// Explicit invocation table; undefined off-table.
struct SelectionTableEntry {
  Point z;
  std::vector<Report> reports;
  std::size_t chosen_index = 0;
};
std::shared_ptr<SelectionRule> make_table_selection(std::size_t r,
                                                    std::vector<SelectionTableEntry> entries);

// Initializer family: per-domain values with rho(x) >= min(x) everywhere.
// Materialization validates min dominance and names the first witness on
// violation.
class MinDominantRule {
 public:
  explicit MinDominantRule(std::string name) : name_(std::move(name)) {}
  virtual ~MinDominantRule() = default;

  const std::string& name() const { return name_; }

  virtual std::vector<std::uint64_t> materialize(const Domain& d) const;

  virtual std::uint64_t value(const Domain& d, const Point& x) const = 0;

 private:
  std::string name_;
};

std::shared_ptr<MinDominantRule> make_min_init();
std::shared_ptr<MinDominantRule> make_max_init();
// min(x) plus a per-point offset from the table (0 when absent).
std::shared_ptr<MinDominantRule> make_offset_table_init(
    std::vector<std::pair<Point, std::uint64_t>> offsets);
// min(x) plus a hash-derived offset in [0, max_offset].
std::shared_ptr<MinDominantRule> make_seeded_offset_init(std::uint64_t max_offset,
                                                         std::uint64_t seed);
// Absolute values per point, min(x) fallback for unlisted points.
std::shared_ptr<MinDominantRule> make_point_table_init(std::string name,
                                                       std::map<Point, std::uint64_t> table);

struct LabelOptions {
  // Committee tuples enumerated per vertex are capped; exceeding the cap is
  // an error, never a silent truncation.
  std::uint64_t tuple_cap = 20000;
  // Retain each vertex's set of defined committee values.
  bool keep_phi_values = false;
  // Nonzero: permute intra-layer processing order (result must not change;
  // exists so tests can assert that).
  std::uint64_t process_shuffle_seed = 0;
};

// A total labeling of a domain plus, per vertex, whether its set of defined
// committee values was empty.
class Labeling {
 public:
  Labeling(std::shared_ptr<const Domain> dom, std::vector<std::uint64_t> values,
           std::vector<char> phi_empty,
           std::vector<std::vector<std::uint64_t>> phi_values = {});

  // Arbitrary values, phi flags all false. For tests and ad-hoc functions.
  static Labeling from_values(std::shared_ptr<const Domain> dom,
                              std::vector<std::uint64_t> values);

  const Domain& domain() const { return *dom_; }
  const std::shared_ptr<const Domain>& domain_ptr() const { return dom_; }

  std::uint64_t value_index(std::size_t i) const { return values_[i]; }
  bool phi_empty_index(std::size_t i) const { return phi_empty_[i] != 0; }

  std::uint64_t value_at(const Point& z) const;
  bool phi_empty_at(const Point& z) const;

  const std::vector<std::uint64_t>& values() const { return values_; }
  const std::vector<char>& phi_empty_flags() const { return phi_empty_; }

  // Sorted defined-value set of vertex i; null unless retained.
  const std::vector<std::uint64_t>* phi_values_index(std::size_t i) const;

  bool operator==(const Labeling& other) const {
    return dom_->points() == other.dom_->points() && values_ == other.values_ &&
           phi_empty_ == other.phi_empty_;
  }

 private:
  std::shared_ptr<const Domain> dom_;
  std::vector<std::uint64_t> values_;
  std::vector<char> phi_empty_;
  std::vector<std::vector<std::uint64_t>> phi_values_;
};

// Terminal path labeling: a terminal vertex carries its max coordinate;
// every other vertex carries the least min coordinate over the terminal
// vertices reachable from it.
Labeling terminal_labeling(const DownwardGraph& g);

// Committee labeling: layered recursion, bottom layer upward. A vertex's
// committee tuples range over all ordered r-tuples (repetition allowed) of
// its out-neighbors; members with an empty committee set report their min
// coordinate, others report their label. The vertex takes the minimum
// defined selection, or its max coordinate when no selection is defined.
Labeling committee_labeling(const DownwardGraph& g, const SelectionRule& f,
                            const LabelOptions& opt = {});

// Same recursion, but vertices with no defined selection take rho instead of
// their max coordinate. Committee members with an empty set still report
// their min coordinate, not rho.
Labeling initialized_labeling(const DownwardGraph& g, const SelectionRule& f,
                              const MinDominantRule& rho, const LabelOptions& opt = {});

struct SelectionInvocation {
  Point z;
  std::vector<Report> reports;
};

struct SelectionCheck {
  struct Violation {
    SelectionInvocation call;
    std::uint64_t returned = 0;
  };
  bool ok = true;
  std::vector<Violation> violations;
};

// Replays the invocations and confirms every defined result is one of its
// report values.
SelectionCheck validate_selection(const SelectionRule& f,
                                  const std::vector<SelectionInvocation>& samples);

}  // namespace reglat
