#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "qround/algorithms.hpp"
#include "qround/oracles.hpp"

namespace qround {

/// Batch model: any number of queries per batch, at most max_batches() batches.
class BatchAlgorithm {
 public:
  virtual ~BatchAlgorithm() = default;
  virtual std::string name() const = 0;
  virtual bool supports(const Instance& inst) const = 0;
  virtual void reset(const Instance&) {}
  virtual std::size_t max_batches() const = 0;
  virtual std::vector<ElementId> next_batch(const Instance& inst, const KnowledgeState& K) = 0;
};

/// Cover in the first batch, known-point dependents in the second.
class SortingTwoBatch : public BatchAlgorithm {
 public:
  explicit SortingTwoBatch(CoverMode mode = CoverMode::IntervalExact) : mode_(mode) {}
  std::string name() const override { return mode_ == CoverMode::Matching ? "sorting-2batch-matching" : "sorting-2batch"; }
  bool supports(const Instance& inst) const override { return inst.kind() == ProblemKind::Sorting; }
  void reset(const Instance&) override { batch_ = 0; }
  std::size_t max_batches() const override { return 2; }
  std::vector<ElementId> next_batch(const Instance& inst, const KnowledgeState& K) override;

 private:
  CoverMode mode_;
  std::size_t batch_ = 0;
};

/// One batch with every unknown element.
class QueryAllBatch : public BatchAlgorithm {
 public:
  std::string name() const override { return "query-all"; }
  bool supports(const Instance&) const override { return true; }
  std::size_t max_batches() const override { return 1; }
  std::vector<ElementId> next_batch(const Instance& inst, const KnowledgeState& K) override;
};

std::unique_ptr<BatchAlgorithm> make_batch_algorithm(const std::string& name);
std::vector<std::string> batch_algorithm_names();

/// Splits each batch of the wrapped algorithm into rounds of k.
class BatchesToRounds : public RoundAlgorithm {
 public:
  explicit BatchesToRounds(std::unique_ptr<BatchAlgorithm> inner) : inner_(std::move(inner)) {}
  std::string name() const override { return inner_->name() + "@rounds"; }
  bool supports(const Instance& inst) const override { return inner_->supports(inst); }
  void reset(const Instance& inst) override;
  std::vector<ElementId> next_round(const Instance& inst, const KnowledgeState& K) override;
  bool fills_rounds() const override { return false; }
  std::size_t batches_used() const { return batches_; }

 private:
  std::unique_ptr<BatchAlgorithm> inner_;
  std::vector<ElementId> pending_;
  std::size_t batches_ = 0;
};

std::unique_ptr<RoundAlgorithm> batches_to_rounds(std::unique_ptr<BatchAlgorithm> inner);

using RoundAlgorithmFactory = std::function<std::unique_ptr<RoundAlgorithm>()>;

/// ceil(n^(e/x)) computed exactly.
std::size_t ceil_root_power(std::size_t n, std::size_t e, std::size_t x);

/// Runs x = (r-1)/floor(alpha) sequences of floor(alpha) rounds of a fresh round algorithm,
/// sequence i with k = ceil(n^((i-1)/x)), then one batch querying everything left.
class RoundsToBatches : public BatchAlgorithm {
 public:
  RoundsToBatches(RoundAlgorithmFactory factory, Rational alpha, std::size_t r);
  std::string name() const override { return name_ + "@batches"; }
  bool supports(const Instance& inst) const override;
  void reset(const Instance& inst) override;
  std::size_t max_batches() const override { return r_; }
  std::vector<ElementId> next_batch(const Instance& inst, const KnowledgeState& K) override;

  std::size_t sequences() const { return x_; }
  /// k of each sequence for the instance of the last reset.
  const std::vector<std::size_t>& k_schedule() const { return ks_; }

 private:
  RoundAlgorithmFactory factory_;
  std::string name_;
  std::size_t floor_alpha_;
  std::size_t r_;
  std::size_t x_;
  std::vector<std::size_t> ks_;
  std::size_t seq_ = 0;
  std::size_t step_ = 0;
  bool final_done_ = false;
  std::unique_ptr<RoundAlgorithm> current_;
  Instance current_inst_;
};

std::unique_ptr<BatchAlgorithm> rounds_to_batches(RoundAlgorithmFactory factory, Rational alpha, std::size_t r);

struct BatchReport {
  std::size_t batches = 0;
  std::size_t queries = 0;
  std::vector<std::size_t> batch_sizes;
  std::size_t opt1 = 0;
  bool solved = false;
};

/// Drives a batch algorithm; each batch is one oracle round.
BatchReport run_batches(BatchAlgorithm& alg, const Instance& inst, ValueOracle& oracle);

/// W(x) = x lg x.
double w(double x);
/// Inverse of W on its increasing branch y > 1, by bisection to 1e-9. Throws std::domain_error for x <= 0.
double w_inverse(double x);

}  // namespace qround
