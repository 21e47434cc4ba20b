#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qround/instance.hpp"
#include "qround/vertex_cover.hpp"

namespace qround {

/// Online round builder. The harness calls next_round until the instance is solved;
/// each round has at most k distinct, unknown elements.
class RoundAlgorithm {
 public:
  virtual ~RoundAlgorithm() = default;
  virtual std::string name() const = 0;
  virtual bool supports(const Instance& inst) const = 0;
  /// Clears per-run state. Called by the harness before the first round.
  virtual void reset(const Instance&) { log_.clear(); }
  virtual std::vector<ElementId> next_round(const Instance& inst, const KnowledgeState& K) = 0;
  /// Algorithms that fill every round except possibly the last.
  virtual bool fills_rounds() const { return true; }

  const std::vector<std::string>& log() const { return log_; }

 protected:
  void note(std::string line) { log_.push_back(std::move(line)); }

 private:
  std::vector<std::string> log_;
};

/// Vertex cover first (in as many rounds as needed), then the unknown intervals that
/// contain a known point.
class SortingCoverAlgorithm : public RoundAlgorithm {
 public:
  /// Without a mode the cover is interval-exact on disjoint families and general-exact otherwise.
  explicit SortingCoverAlgorithm(std::optional<CoverMode> mode = std::nullopt) : mode_(mode) {}
  std::string name() const override;
  bool supports(const Instance& inst) const override { return inst.kind() == ProblemKind::Sorting; }
  void reset(const Instance& inst) override;
  std::vector<ElementId> next_round(const Instance& inst, const KnowledgeState& K) override;
  bool fills_rounds() const override { return false; }

  /// Non-trivial cover elements, computed on the initial knowledge.
  static std::vector<ElementId> initial_cover(const Instance& inst, const KnowledgeState& K, CoverMode mode);
  /// Unknown elements dependent on a known point of a common set, ascending ids.
  static std::vector<ElementId> point_dependents(const Instance& inst, const KnowledgeState& K);

 private:
  std::optional<CoverMode> mode_;
  std::vector<ElementId> queue_;
  std::size_t pos_ = 0;
  bool started_ = false;
};

/// The k leftmost candidates of the single set.
class MinimumSingleAlgorithm : public RoundAlgorithm {
 public:
  std::string name() const override { return "min-single"; }
  bool supports(const Instance& inst) const override { return inst.kind() == ProblemKind::Minimum && inst.m() == 1; }
  std::vector<ElementId> next_round(const Instance& inst, const KnowledgeState& K) override;
};

/// BAL: repeatedly adds the leftmost unpicked candidate of an active set of minimum prefix
/// length (lowest set index on ties).
class BalancedAlgorithm : public RoundAlgorithm {
 public:
  std::string name() const override { return "bal"; }
  bool supports(const Instance& inst) const override { return inst.kind() == ProblemKind::Minimum; }
  std::vector<ElementId> next_round(const Instance& inst, const KnowledgeState& K) override;
};

/// BAL with a round-robin cursor over active sets that persists across rounds.
class RoundRobinBalancedAlgorithm : public RoundAlgorithm {
 public:
  std::string name() const override { return "bal-rr"; }
  bool supports(const Instance& inst) const override { return inst.kind() == ProblemKind::Minimum; }
  void reset(const Instance& inst) override;
  std::vector<ElementId> next_round(const Instance& inst, const KnowledgeState& K) override;

 private:
  std::size_t cursor_ = 0;
};

/// One element added to Q by the budget dynamics, and what each paying set paid.
struct Charge {
  ElementId element = 0;
  std::vector<std::pair<std::size_t, Rational>> payers;
};

/// Budget algorithm: leftmost elements of all active sets, then budget-driven purchases.
class BudgetAlgorithm : public RoundAlgorithm {
 public:
  std::string name() const override { return "budget"; }
  bool supports(const Instance& inst) const override { return inst.kind() == ProblemKind::Minimum; }
  void reset(const Instance& inst) override;
  std::vector<ElementId> next_round(const Instance& inst, const KnowledgeState& K) override;

  /// Charges of every round so far, indexed by round (0-based).
  const std::vector<std::vector<Charge>>& charges() const { return charges_; }

 private:
  std::vector<std::vector<Charge>> charges_;
};

/// The k leftmost non-trivial intervals that can still hold the i-th smallest value.
class SelectionValueAlgorithm : public RoundAlgorithm {
 public:
  std::string name() const override { return "sel-value"; }
  bool supports(const Instance& inst) const override { return inst.kind() == ProblemKind::SelectionValue; }
  std::vector<ElementId> next_round(const Instance& inst, const KnowledgeState& K) override;
};

/// Category counts of a Selection round: (1) contain the target area, (2) strictly inside,
/// (3) overlap on the left, (4) overlap on the right.
struct CategoryCounts {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  std::size_t d = 0;
};

/// Target area of the current knowledge for rank i.
UncertainInterval target_area(const KnowledgeState& K, std::size_t rank);

struct Categories {
  UncertainInterval target;
  std::vector<ElementId> cat[4];  // unknown intervals only, in query order
  CategoryCounts counts;          // b, c, d count known intervals too
};
Categories classify(const KnowledgeState& K, std::size_t rank);

/// Categories (1), then (2), then alternately (3) and (4) starting with (3).
class SelectionFullAlgorithm : public RoundAlgorithm {
 public:
  std::string name() const override { return "sel-full"; }
  bool supports(const Instance& inst) const override { return inst.kind() == ProblemKind::SelectionFull; }
  void reset(const Instance& inst) override;
  std::vector<ElementId> next_round(const Instance& inst, const KnowledgeState& K) override;
  bool fills_rounds() const override { return false; }

  /// Counts at the start of each round.
  const std::vector<CategoryCounts>& counts() const { return counts_; }

 private:
  std::vector<CategoryCounts> counts_;
};

std::unique_ptr<RoundAlgorithm> make_algorithm(const std::string& name);
std::vector<std::string> algorithm_names();

}  // namespace qround
