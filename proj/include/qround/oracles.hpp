#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qround/instance.hpp"

namespace qround {

/// Answers queries one round at a time and finally commits to a full realization.
/// The base class enforces consistency: each element is answered once, inside its
/// interval, and finalize() must agree with every answer given.
class ValueOracle {
 public:
  explicit ValueOracle(Instance instance);
  virtual ~ValueOracle() = default;

  const Instance& instance() const { return instance_; }
  virtual std::string name() const = 0;

  /// Answers for the ids of one round, in the same order.
  std::vector<Rational> answer_round(const std::vector<ElementId>& round);
  /// A realization agreeing with every past answer. May be called once answering is over.
  Realization finalize();

  const std::vector<std::vector<ElementId>>& history() const { return history_; }
  const std::vector<std::string>& log() const { return log_; }
  std::optional<Rational> answered(ElementId id) const { return answered_.at(id); }

 protected:
  virtual std::vector<Rational> decide(const std::vector<ElementId>& round) = 0;
  virtual Realization complete() = 0;
  void note(std::string line) { log_.push_back(std::move(line)); }

  Instance instance_;
  std::vector<std::optional<Rational>> answered_;
  std::vector<std::vector<ElementId>> history_;

 private:
  std::vector<std::string> log_;
};

class FixedOracle : public ValueOracle {
 public:
  FixedOracle(Instance instance, Realization r);
  std::string name() const override { return "fixed"; }

 protected:
  std::vector<Rational> decide(const std::vector<ElementId>& round) override;
  Realization complete() override { return realization_; }

 private:
  Realization realization_;
};

struct AdversaryRun {
  Instance instance;
  std::unique_ptr<ValueOracle> oracle;
};

std::unique_ptr<ValueOracle> fixed_oracle(const Instance& inst, const Realization& r);

/// Sorting on k*c dependent pairs A = [4p,4p+2], B = [4p+1,4p+3]; whichever member is
/// queried first is placed inside the other. opt_k = c, any algorithm needs 2c rounds.
AdversaryRun sorting_pair_adversary(std::size_t c, std::size_t k);

/// M^M disjoint Minimum sets of M*k elements, k = M^{M+1}; forces M rounds with opt_k = 1.
AdversaryRun minimum_wlb_adversary(std::size_t M);

/// m disjoint Minimum sets with k = m; after each round solves the set with most queries.
AdversaryRun minimum_additive_lb_adversary(std::size_t m);

/// Selection (full) with i-1 copies of [0,3], i-1 copies of [5,8] and a middle [2,6]; k = i.
AdversaryRun selection_full_lb_adversary(std::size_t i);

/// Selection (value) with i copies of (0,5) and i copies of {3}; rank i.
AdversaryRun selection_value_lb_adversary(std::size_t i, std::size_t k = 0);

}  // namespace qround
