#include <gtest/gtest.h>

#include "qround/algorithms.hpp"
#include "qround/errors.hpp"
#include "qround/generators.hpp"
#include "qround/harness.hpp"
#include "qround/opt.hpp"
#include "qround/oracles.hpp"
#include "qround/solvedness.hpp"

using namespace qround;

namespace {

// Replays the answer log against the finalized realization.
void expect_replay_consistent(ValueOracle& o, const Realization& r) {
  EXPECT_NO_THROW(r.validate(o.instance()));
  for (const auto& round : o.history())
    for (ElementId id : round) {
      ASSERT_TRUE(o.answered(id));
      EXPECT_EQ(*o.answered(id), r[id]);
    }
}

/// Runs a fixed schedule of rounds against an oracle.
Realization drive(ValueOracle& o, const std::vector<std::vector<ElementId>>& rounds) {
  for (const auto& q : rounds) o.answer_round(q);
  return o.finalize();
}

}  // namespace

TEST(FixedOracle, AnswersAndFinalizes) {
  Generated g = gen_fig2_bal_instance();
  auto o = fixed_oracle(g.instance, g.realization);
  EXPECT_EQ(o->finalize(), g.realization);
  auto ans = o->answer_round({0, 2});
  EXPECT_EQ(ans[0], g.realization[0]);
  EXPECT_EQ(ans[1], g.realization[2]);
  EXPECT_THROW(o->answer_round({0}), OracleError);
  EXPECT_THROW(o->answer_round({99}), OracleError);
  expect_replay_consistent(*o, o->finalize());
}

TEST(FixedOracle, SameRealizationGivesSameValue) {
  Generated g = gen_fig2_bal_instance();
  auto a = fixed_oracle(g.instance, g.realization);
  auto b = fixed_oracle(g.instance, g.realization);
  EXPECT_EQ(a->answer_round({4}), b->answer_round({4}));
}

TEST(PairAdversary, FourConfigurationsOfOnePair) {
  // c = 1, k = 1: both A-first and B-first make the other element necessary.
  for (int first = 0; first < 2; ++first) {
    AdversaryRun run = sorting_pair_adversary(1, 1);
    ASSERT_EQ(run.instance.n(), 2u);
    EXPECT_TRUE(dependent(run.instance.element(0), run.instance.element(1)));
    ElementId q = static_cast<ElementId>(first);
    Rational v = run.oracle->answer_round({q})[0];
    EXPECT_TRUE(run.instance.element(1 - q).contains(v));
    Realization r = run.oracle->finalize();
    OptReport opt = opt1_bruteforce(run.instance, r);
    EXPECT_EQ(opt.opt1, 1u);
    EXPECT_EQ(opt.opt_set, std::vector<ElementId>{1 - q});
  }
  // Both in one round: the adversary answers so that one query would have sufficed.
  AdversaryRun run = sorting_pair_adversary(1, 1);
  Realization r = drive(*run.oracle, {{0, 1}});
  OptReport opt = opt1_bruteforce(run.instance, r);
  EXPECT_EQ(opt.opt1, 1u);
  EXPECT_EQ(opt.opt_set, std::vector<ElementId>{0});
}

TEST(PairAdversary, ForcesTwoRoundsPerOptRound) {
  for (std::size_t c = 1; c <= 4; ++c)
    for (std::size_t k : {1, 3}) {
      AdversaryRun run = sorting_pair_adversary(c, k);
      SortingCoverAlgorithm alg;
      auto res = qround::run(alg, run.instance, *run.oracle);
      EXPECT_EQ(res.report.opt_k, c);
      EXPECT_GE(res.report.alg_rounds, 2 * c);
      EXPECT_EQ(res.report.opt1, c * k);
      expect_replay_consistent(*run.oracle, res.trace.final_realization);
    }
}

TEST(WlbAdversary, ForcesMRoundsWithOptOneRound) {
  for (std::size_t M : {2, 3}) {
    for (const char* name : {"bal", "bal-rr", "budget"}) {
      AdversaryRun run = minimum_wlb_adversary(M);
      auto alg = make_algorithm(name);
      auto res = qround::run(*alg, run.instance, *run.oracle);
      EXPECT_EQ(res.report.opt_k, 1u) << name << " M=" << M;
      EXPECT_GE(res.report.alg_rounds, M) << name << " M=" << M;
      expect_replay_consistent(*run.oracle, res.trace.final_realization);
    }
  }
  EXPECT_THROW(minimum_wlb_adversary(1), Error);
}

TEST(AdditiveAdversary, TwoSetsWasteAtLeastOne) {
  for (const char* name : {"bal", "bal-rr", "budget"}) {
    AdversaryRun run = minimum_additive_lb_adversary(2);
    auto alg = make_algorithm(name);
    auto res = qround::run(*alg, run.instance, *run.oracle);
    EXPECT_GE(res.report.wasted, 1u) << name;
    expect_replay_consistent(*run.oracle, res.trace.final_realization);
  }
}

TEST(SelectionFullAdversary, MiddleSkippedInRoundOne) {
  for (std::size_t i = 2; i <= 5; ++i) {
    AdversaryRun run = selection_full_lb_adversary(i);
    ElementId middle = 2 * i - 2;
    std::vector<ElementId> round1;
    for (ElementId id = 0; id < i; ++id) round1.push_back(id);  // left copies, then a right copy
    ASSERT_EQ(std::count(round1.begin(), round1.end(), middle), 0);
    auto vals = run.oracle->answer_round(round1);
    KnowledgeState K = run.instance.initial_knowledge();
    for (std::size_t j = 0; j < round1.size(); ++j) K.reveal(round1[j], vals[j]);
    // Unsolved after i queries, so at least opt_1 + i queries in total.
    EXPECT_FALSE(instance_solved(run.instance, K));
    std::vector<ElementId> rest;
    for (ElementId id = i; id < run.instance.n(); ++id) rest.push_back(id);
    run.oracle->answer_round(rest);
    Realization r = run.oracle->finalize();
    OptReport opt = opt1_selection_full(run.instance, r);
    EXPECT_EQ(opt.opt1, 1u);
    EXPECT_EQ(r[middle], Rational(4));
    expect_replay_consistent(*run.oracle, r);
  }
}

TEST(SelectionFullAdversary, BalancedRoundWithMiddle) {
  for (std::size_t i = 2; i <= 6; ++i) {
    AdversaryRun run = selection_full_lb_adversary(i);
    SelectionFullAlgorithm alg;
    auto res = qround::run(alg, run.instance, *run.oracle);
    EXPECT_EQ(res.report.opt1, i) << i;
    EXPECT_GE(res.report.wasted, static_cast<std::size_t>(ceil_div(static_cast<long>(i) - 1, 2))) << i;
    expect_replay_consistent(*run.oracle, res.trace.final_realization);
  }
}

TEST(SelectionValueAdversary, ForcesIQueries) {
  for (std::size_t i = 1; i <= 6; ++i) {
    AdversaryRun run = selection_value_lb_adversary(i);
    SelectionValueAlgorithm alg;
    auto res = qround::run(alg, run.instance, *run.oracle);
    EXPECT_GE(res.report.alg_queries, i);
    EXPECT_EQ(res.report.opt1, 1u);
    EXPECT_EQ(res.report.alg_rounds, 1u);
    expect_replay_consistent(*run.oracle, res.trace.final_realization);
  }
}

TEST(SelectionValueAdversary, OneShortIsNotSolved) {
  std::size_t i = 4;
  AdversaryRun run = selection_value_lb_adversary(i);
  KnowledgeState K = run.instance.initial_knowledge();
  std::vector<ElementId> q;
  for (ElementId id = 0; id + 1 < i; ++id) q.push_back(id);
  auto vals = run.oracle->answer_round(q);
  for (std::size_t j = 0; j < q.size(); ++j) K.reveal(q[j], vals[j]);
  EXPECT_FALSE(selection_solved(K, i, ProblemKind::SelectionValue));
}

TEST(Adversaries, ReplayAfterArbitrarySchedules) {
  Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    std::vector<AdversaryRun> runs;
    runs.push_back(sorting_pair_adversary(2, 2));
    runs.push_back(minimum_additive_lb_adversary(3));
    runs.push_back(selection_full_lb_adversary(3));
    runs.push_back(selection_value_lb_adversary(3));
    runs.push_back(minimum_wlb_adversary(2));
    for (auto& run : runs) {
      std::vector<ElementId> ids;
      for (ElementId id = 0; id < run.instance.n(); ++id)
        if (!run.instance.element(id).is_trivial()) ids.push_back(id);
      for (std::size_t i = ids.size(); i > 1; --i) std::swap(ids[i - 1], ids[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(i) - 1))]);
      std::size_t take = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(ids.size())));
      std::size_t pos = 0;
      while (pos < take) {
        std::size_t len = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(run.instance.k())));
        std::vector<ElementId> round(ids.begin() + static_cast<long>(pos), ids.begin() + static_cast<long>(std::min(take, pos + len)));
        run.oracle->answer_round(round);
        pos += round.size();
      }
      Realization r = run.oracle->finalize();
      expect_replay_consistent(*run.oracle, r);
    }
  }
}
