#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "reglat/labelers.hpp"

namespace reglat {

enum class ClassCase { ConstantBelowMin, MinDominant, Neither };

struct ClassReport {
  OrderType type;
  ClassCase kind = ClassCase::Neither;
  // ConstantBelowMin: the shared value (below min(E)).
  std::optional<std::uint64_t> constant;
  // Neither: class members with f(x) < min(x), capped.
  std::vector<Point> witnesses;
};

struct RegularityReport {
  Cube cube;
  std::vector<ClassReport> classes;  // sorted by order type
  std::vector<std::uint64_t> regressive_values;
  bool regular = false;
};

// {n : some x in xs has f(x) = n < min(x)}, sorted distinct.
std::vector<std::uint64_t> regressive_values(const Labeling& f,
                                             const std::vector<Point>& xs);

// Classifies every order-type class of E^k: constant below min(E),
// min-dominant, or neither. Regular iff no class is neither. Requires E^k
// contained in the labeling's domain.
RegularityReport check_regularity(const Labeling& f, const Cube& e,
                                  std::size_t witness_cap = 8);

// E^k split by where the label falls: below min(E) / in [min(E), min(x)) /
// at or above min(x).
struct BlockPartition {
  std::vector<Point> e0, e1, e2;
};

BlockPartition partition_blocks(const Labeling& f, const Cube& e);

// Produces the family member with the given domain.
using LabelingFamily = std::function<Labeling(std::shared_ptr<const Domain>)>;

struct CandidateFailure {
  std::vector<std::uint64_t> base;
  std::size_t neither_classes = 0;
};

struct CubeSearchResult {
  std::optional<std::pair<Cube, RegularityReport>> found;
  std::uint64_t candidates = 0;    // contained cubes actually checked
  std::uint64_t subsets_seen = 0;  // p-subsets of the field enumerated
  std::vector<CandidateFailure> failures;  // capped summaries
};

// Exhaustive search over p-subsets E of field(D) with E^k contained in D, in
// colexicographic order over the sorted field; returns the first regular E
// or an exhaustion summary. A finite search: exhaustion is a legitimate
// outcome, not an error.
CubeSearchResult find_regular_cube(const LabelingFamily& family,
                                   std::shared_ptr<const Domain> d, std::size_t p,
                                   std::uint64_t candidate_cap = 100000,
                                   std::size_t failure_cap = 32);

struct JumpFreeWitness {
  Point x;
  std::uint64_t value_small = 0;  // label in the smaller domain
  std::uint64_t value_large = 0;  // label in the larger domain
};

struct JumpFreeResult {
  bool holds = true;
  std::uint64_t checked = 0;  // points where the agreement antecedent held
  std::vector<JumpFreeWitness> witnesses;
};

// For every x in both domains with A_x contained in B_x and the labelings
// agreeing on A_x, checks f_A(x) >= f_B(x). A_x is the part of A strictly
// below max(x).
JumpFreeResult jump_free_check(const Labeling& fa, const Labeling& fb);

}  // namespace reglat
