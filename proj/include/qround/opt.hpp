#pragma once

#include <string>
#include <vector>

#include "qround/instance.hpp"

namespace qround {

enum class OptMethod { ClosedForm, BruteForce };
std::string opt_method_name(OptMethod m);

struct OptReport {
  std::size_t opt1 = 0;
  /// Sorted ascending.
  std::vector<ElementId> opt_set;
  std::size_t opt_k = 0;
  OptMethod method = OptMethod::ClosedForm;
};

/// Querying exactly these elements solves the instance.
bool feasible(const Instance& inst, const Realization& r, const std::vector<ElementId>& queried);

/// Per set, every non-trivial element with left endpoint below the set minimum.
OptReport opt1_minimum(const Instance& inst, const Realization& r);
/// Every non-trivial interval containing the i-th smallest value.
OptReport opt1_selection_full(const Instance& inst, const Realization& r);

constexpr std::size_t kDefaultBruteForceCap = 22;
/// Smallest feasible set by cardinality-ordered subset search, lexicographically smallest
/// among minima. Sorting is searched per connected component of the dependency graph,
/// and the cap applies per component; other problems cap the number of non-trivial elements.
OptReport opt1_bruteforce(const Instance& inst, const Realization& r, std::size_t cap = kDefaultBruteForceCap);

/// The fixed OPT_1 used for wasted-query accounting: closed form where one exists, else brute force.
OptReport canonical_opt(const Instance& inst, const Realization& r, std::size_t cap = kDefaultBruteForceCap);

}  // namespace qround
