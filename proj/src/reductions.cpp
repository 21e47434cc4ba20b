#include "qround/reductions.hpp"

#include <algorithm>
#include <set>

#include <gmpxx.h>

#include "qround/errors.hpp"
#include "qround/opt.hpp"
#include "qround/solvedness.hpp"

namespace qround {

std::vector<ElementId> SortingTwoBatch::next_batch(const Instance& inst, const KnowledgeState& K) {
  ++batch_;
  if (instance_solved(inst, K)) return {};
  if (batch_ == 1) {
    CoverMode mode = mode_;
    if (mode == CoverMode::IntervalExact && !inst.disjoint_family()) mode = CoverMode::GeneralExact;
    return SortingCoverAlgorithm::initial_cover(inst, K, mode);
  }
  return SortingCoverAlgorithm::point_dependents(inst, K);
}

std::vector<ElementId> QueryAllBatch::next_batch(const Instance& inst, const KnowledgeState& K) {
  std::vector<ElementId> out;
  if (instance_solved(inst, K)) return out;
  for (ElementId id = 0; id < inst.n(); ++id)
    if (!K.is_known(id)) out.push_back(id);
  return out;
}

std::unique_ptr<BatchAlgorithm> make_batch_algorithm(const std::string& name) {
  if (name == "sorting-2batch") return std::make_unique<SortingTwoBatch>();
  if (name == "sorting-2batch-matching") return std::make_unique<SortingTwoBatch>(CoverMode::Matching);
  if (name == "query-all") return std::make_unique<QueryAllBatch>();
  throw Error("unknown batch algorithm '" + name + "'");
}

std::vector<std::string> batch_algorithm_names() { return {"sorting-2batch", "sorting-2batch-matching", "query-all"}; }

void BatchesToRounds::reset(const Instance& inst) {
  RoundAlgorithm::reset(inst);
  inner_->reset(inst);
  pending_.clear();
  batches_ = 0;
}

std::vector<ElementId> BatchesToRounds::next_round(const Instance& inst, const KnowledgeState& K) {
  std::erase_if(pending_, [&](ElementId id) { return K.is_known(id); });
  if (pending_.empty()) {
    if (instance_solved(inst, K)) return {};
    pending_ = inner_->next_batch(inst, K);
    if (pending_.empty()) return {};
    ++batches_;
    note("batch " + std::to_string(batches_) + ": " + std::to_string(pending_.size()) + " queries");
  }
  std::size_t take = std::min(inst.k(), pending_.size());
  std::vector<ElementId> round(pending_.begin(), pending_.begin() + static_cast<long>(take));
  pending_.erase(pending_.begin(), pending_.begin() + static_cast<long>(take));
  return round;
}

std::unique_ptr<RoundAlgorithm> batches_to_rounds(std::unique_ptr<BatchAlgorithm> inner) {
  return std::make_unique<BatchesToRounds>(std::move(inner));
}

std::size_t ceil_root_power(std::size_t n, std::size_t e, std::size_t x) {
  if (x == 0) throw std::domain_error("root of order zero");
  mpz_class target;
  mpz_ui_pow_ui(target.get_mpz_t(), n, e);
  std::size_t lo = 1;
  std::size_t hi = std::max<std::size_t>(1, n);
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), mid, x);
    if (p >= target) hi = mid; else lo = mid + 1;
  }
  return lo;
}

RoundsToBatches::RoundsToBatches(RoundAlgorithmFactory factory, Rational alpha, std::size_t r)
    : factory_(std::move(factory)), r_(r) {
  if (alpha < Rational(1)) throw InvalidInstance("alpha must be at least 1");
  if (r < 1) throw InvalidInstance("r must be at least 1");
  floor_alpha_ = static_cast<std::size_t>(alpha.floor().to_long());
  x_ = (r - 1) / floor_alpha_;
  name_ = factory_()->name();
}

bool RoundsToBatches::supports(const Instance& inst) const { return factory_()->supports(inst); }

void RoundsToBatches::reset(const Instance& inst) {
  ks_.clear();
  for (std::size_t i = 1; i <= x_; ++i) ks_.push_back(ceil_root_power(inst.n(), i - 1, x_));
  seq_ = 0;
  step_ = 0;
  final_done_ = false;
  current_.reset();
}

std::vector<ElementId> RoundsToBatches::next_batch(const Instance& inst, const KnowledgeState& K) {
  if (instance_solved(inst, K)) return {};
  while (seq_ < x_) {
    if (step_ == 0) {
      current_ = factory_();
      current_inst_ = inst.with_k(ks_[seq_]);
      current_->reset(current_inst_);
    }
    if (step_ < floor_alpha_) {
      ++step_;
      auto batch = current_->next_round(current_inst_, K);
      if (!batch.empty()) return batch;
    }
    ++seq_;
    step_ = 0;
  }
  if (final_done_) return {};
  final_done_ = true;
  std::vector<ElementId> all;
  for (ElementId id = 0; id < inst.n(); ++id)
    if (!K.is_known(id)) all.push_back(id);
  return all;
}

std::unique_ptr<BatchAlgorithm> rounds_to_batches(RoundAlgorithmFactory factory, Rational alpha, std::size_t r) {
  return std::make_unique<RoundsToBatches>(std::move(factory), std::move(alpha), r);
}

BatchReport run_batches(BatchAlgorithm& alg, const Instance& inst, ValueOracle& oracle) {
  if (!alg.supports(inst)) throw Error(alg.name() + " does not support " + problem_name(inst.kind()) + " instances");
  alg.reset(inst);
  KnowledgeState K = inst.initial_knowledge();
  BatchReport rep;
  while (!instance_solved(inst, K)) {
    if (rep.batches > inst.n()) throw InternalError(alg.name() + " does not terminate");
    auto batch = alg.next_batch(inst, K);
    if (batch.empty()) throw InternalError(alg.name() + " emitted an empty batch on an unsolved instance");
    std::set<ElementId> seen;
    for (ElementId id : batch)
      if (!seen.insert(id).second || K.is_known(id))
        throw InternalError(alg.name() + " emitted a repeated or known element " + std::to_string(id + 1));
    auto answers = oracle.answer_round(batch);
    for (std::size_t q = 0; q < batch.size(); ++q) K.reveal(batch[q], answers[q]);
    ++rep.batches;
    rep.queries += batch.size();
    rep.batch_sizes.push_back(batch.size());
  }
  rep.solved = true;
  Realization r = oracle.finalize();
  rep.opt1 = canonical_opt(inst, r).opt1;
  return rep;
}

}  // namespace qround
