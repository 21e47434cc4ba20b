// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "qround/algorithms.hpp"
#include "qround/generators.hpp"
#include "qround/harness.hpp"
#include "qround/opt.hpp"
#include "qround/oracles.hpp"
#include "qround/reductions.hpp"
#include "qround/solvedness.hpp"

using namespace qround;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Rational harmonic(std::size_t m) {
  Rational h(0);
  for (std::size_t j = 1; j <= m; ++j) h += Rational(1, static_cast<long>(j));
  return h;
}

Rational R(std::size_t v) { return Rational(static_cast<long>(v)); }

RunResult run_fixed(const std::string& alg, const Generated& g, std::size_t cap = kDefaultBruteForceCap) {
  auto a = make_algorithm(alg);
  return run(*a, g.instance, *fixed_oracle(g.instance, g.realization), RunOptions{cap});
}

std::string seed_note(const std::string& what, std::uint64_t seed) {
  return what + " (seed " + std::to_string(seed) + ")";
}

// ---------------------------------------------------------------------------------------------
// Exact ceil(log_b m) for b = r/(r-1), r = (2(1+e) + sqrt(2e^2+4e+4))/e.

/// Rational bounds lo <= sqrt(x) <= hi with hi - lo <= tol.
std::pair<Rational, Rational> sqrt_bounds(const Rational& x, const Rational& tol) {
  Rational lo(0);
  Rational hi = std::max(Rational(1), x);
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / Rational(2);
    if (mid * mid <= x) lo = mid;
    else hi = mid;
  }
  return {lo, hi};
}

/// Smallest t >= 0 with b^t >= m.
std::size_t ceil_log(const Rational& b, std::size_t m) {
  std::size_t t = 0;
  Rational p(1);
  while (p < R(m)) {
    p *= b;
    ++t;
  }
  return t;
}

std::size_t ceil_log_r(const Rational& eps, std::size_t m) {
  Rational radicand = Rational(2) * eps * eps + Rational(4) * eps + Rational(4);
  for (long digits = 20;; digits *= 2) {
    Rational tol(1, 1L << std::min(digits, 60L));
    auto [slo, shi] = sqrt_bounds(radicand, tol);
    Rational rlo = (Rational(2) * (Rational(1) + eps) + slo) / eps;
    Rational rhi = (Rational(2) * (Rational(1) + eps) + shi) / eps;
    // b = 1 + 1/(r-1) decreases in r.
    Rational bmax = Rational(1) + Rational(1) / (rlo - Rational(1));
    Rational bmin = Rational(1) + Rational(1) / (rhi - Rational(1));
    std::size_t t1 = ceil_log(bmax, m);
    std::size_t t2 = ceil_log(bmin, m);
    if (t1 == t2 || digits >= 60) return t2;
  }
}

Rational budget_bound(std::size_t opt_k, std::size_t m) {
  Rational best(-1);
  for (long e = 1; e <= 9; ++e) {
    Rational eps(e, 10);
    Rational b = (Rational(2) + eps) * R(opt_k) + Rational(5) / eps * R(ceil_log_r(eps, m));
    if (best < Rational(0) || b < best) best = b;
  }
  return best;
}

/// Every wasted element bought by the budget dynamics is paid only by sets solved that round.
void check_charges(const BudgetAlgorithm& alg, const RunResult& res, Outcome& out, const std::string& label) {
  const auto& opt = res.report.opt_set;
  for (std::size_t r = 0; r < alg.charges().size(); ++r)
    for (const auto& c : alg.charges()[r]) {
      Rational total(0);
      for (const auto& p : c.payers) total += p.second;
      if (total != Rational(1)) out.fail(label + ": payments do not sum to 1");
      if (std::binary_search(opt.begin(), opt.end(), c.element)) continue;
      for (const auto& p : c.payers)
        if (res.trace.solved_at[p.first] != r + 1)
          out.fail(label + ": wasted element " + std::to_string(c.element + 1) + " charged to surviving set S" +
                   std::to_string(p.first + 1));
    }
}

// ---------------------------------------------------------------------------------------------

Outcome ac1() {
  Outcome out;
  for (std::size_t c = 1; c <= 10; ++c)
    for (std::size_t k : {1, 3, 5}) {
      AdversaryRun adv = sorting_pair_adversary(c, k);
      SortingCoverAlgorithm alg;
      auto res = run(alg, adv.instance, *adv.oracle);
      if (res.report.opt_k != c || res.report.alg_rounds != 2 * c)
        out.fail("pairs c=" + std::to_string(c) + " k=" + std::to_string(k) + ": rounds " +
                 std::to_string(res.report.alg_rounds) + ", opt_k " + std::to_string(res.report.opt_k));
    }
  std::size_t worst_num = 0, worst_den = 1;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    std::size_t n = 6 + seed % 13;
    std::size_t m = 1 + seed % 3;
    Overlap o = m == 1 ? Overlap::Single : (seed % 2 ? Overlap::Disjoint : Overlap::Overlapping);
    Generated g = gen_random(seed, RandomParams{n, m, 1 + seed % 4, o, ProblemKind::Sorting, 0});
    auto res = run_fixed("sorting-vc", g);
    if (res.report.method != OptMethod::BruteForce) out.fail(seed_note("opt not brute force", seed));
    if (res.report.alg_rounds > 2 * res.report.opt_k) out.fail(seed_note("rounds above 2 opt_k", seed));
    if (res.report.alg_rounds * worst_den > worst_num * std::max<std::size_t>(1, res.report.opt_k)) {
      worst_num = res.report.alg_rounds;
      worst_den = std::max<std::size_t>(1, res.report.opt_k);
    }
  }
  if (out.ok) out.detail = "30 pair instances at exactly 2 opt_k; 500 random, worst ratio " + (R(worst_num) / R(worst_den)).str();
  return out;
}

Outcome ac2() {
  Outcome out;
  long worst_excess = -1;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    std::size_t k = 1 + seed % 16;
    std::size_t m = 1 + (seed / 16) % k;
    std::size_t n = std::max<std::size_t>(m, 2 * m + seed % 12);
    Overlap o = m == 1 ? Overlap::Single : Overlap::Disjoint;
    Generated g = gen_random(seed, RandomParams{n, m, k, o, ProblemKind::Minimum, 0});
    auto res = run_fixed("bal", g);
    Rational bound = R(res.report.opt_k) + harmonic(m).ceil();
    if (R(res.report.alg_rounds) > bound) out.fail(seed_note("BAL above opt_k + ceil(H(m))", seed));
    worst_excess = std::max(worst_excess, static_cast<long>(res.report.alg_rounds) - static_cast<long>(res.report.opt_k));
  }
  Generated f2 = gen_fig2_bal_instance();
  auto res = run_fixed("bal", f2);
  if (res.report.alg_rounds != 3 || res.report.wasted != 2)
    out.fail("fig2: rounds " + std::to_string(res.report.alg_rounds) + ", wasted " + std::to_string(res.report.wasted));
  if (out.ok) out.detail = "500 random, max rounds - opt_k = " + std::to_string(worst_excess) + "; fig2 rounds=3 wasted=2";
  return out;
}

/// Shared by criteria 3 and 4: the fig3 grid and 300 random overlapping instances.
struct BudgetRuns {
  Outcome ac3;
  Outcome ac4;
};

BudgetRuns budget_suite() {
  BudgetRuns b;
  std::size_t charged = 0;
  for (std::size_t k : {3, 5})
    for (std::size_t c = 1; c <= 4; ++c) {
      Generated g = gen_fig3_overlap_instance(k, c);
      std::string label = "fig3 k=" + std::to_string(k) + " c=" + std::to_string(c);
      auto bal = run_fixed("bal", g);
      if (bal.report.alg_rounds != c) b.ac3.fail(label + ": BAL rounds " + std::to_string(bal.report.alg_rounds));
      BudgetAlgorithm alg;
      auto res = run(alg, g.instance, *fixed_oracle(g.instance, g.realization));
      if (res.report.alg_rounds != res.report.opt_k)
        b.ac3.fail(label + ": budget rounds " + std::to_string(res.report.alg_rounds) + " vs opt_k " +
                   std::to_string(res.report.opt_k));
      if (c <= k && res.report.alg_rounds != 1) b.ac3.fail(label + ": budget not in one round");
      check_charges(alg, res, b.ac4, label);
      for (const auto& r : alg.charges()) charged += r.size();
      if (k == 3 && c == 3) {
        std::vector<std::vector<ElementId>> want{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
        std::vector<std::vector<ElementId>> got;
        for (auto r : bal.trace.rounds) {
          std::sort(r.ids.begin(), r.ids.end());
          got.push_back(r.ids);
        }
        if (got != want) b.ac3.fail("fig3: BAL schedule differs from {I1,I2,I3},{I4,I5,I6},{I7,I8,I9}");
        if (res.trace.rounds.size() != 1 || res.trace.rounds[0].ids != std::vector<ElementId>{0, 3, 6})
          b.ac3.fail("fig3: budget round is not {I1,I4,I7}");
      }
    }
  Rational worst(0);
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    std::size_t m = 2 + seed % 7;
    Generated g = gen_random(seed, RandomParams{8 + seed % 5, m, 2 + seed % 4, Overlap::Overlapping, ProblemKind::Minimum, 0});
    BudgetAlgorithm alg;
    auto res = run(alg, g.instance, *fixed_oracle(g.instance, g.realization));
    Rational bound = budget_bound(res.report.opt_k, m);
    if (R(res.report.alg_rounds) > bound) b.ac3.fail(seed_note("budget above the epsilon bound", seed));
    Rational slack = R(res.report.alg_rounds) / bound;
    if (slack > worst) worst = slack;
    check_charges(alg, res, b.ac4, "random seed " + std::to_string(seed));
    for (const auto& r : alg.charges()) charged += r.size();
  }
  if (b.ac3.ok)
    b.ac3.detail = "fig3 grid: BAL c rounds, budget opt_k rounds; fig3 schedule; 300 random, max rounds/bound = " +
                   std::to_string(worst.to_double());
  if (b.ac4.ok) b.ac4.detail = std::to_string(charged) + " budget purchases checked, 0 violations";
  return b;
}

Outcome ac5() {
  Outcome out;
  std::ostringstream d;
  for (std::size_t M : {2, 3})
    for (const char* name : {"bal", "bal-rr", "budget"}) {
      AdversaryRun adv = minimum_wlb_adversary(M);
      auto alg = make_algorithm(name);
      auto res = run(*alg, adv.instance, *adv.oracle);
      if (res.report.opt_k != 1 || res.report.alg_rounds < M)
        out.fail(std::string(name) + " wlb M=" + std::to_string(M) + ": rounds " + std::to_string(res.report.alg_rounds) +
                 ", opt_k " + std::to_string(res.report.opt_k));
      if (M == 3 && std::string(name) == "budget") d << "wlb M=3 rounds " << res.report.alg_rounds << "; ";
    }
  for (std::size_t m : {4, 8})
    for (const char* name : {"bal", "bal-rr", "budget"}) {
      AdversaryRun adv = minimum_additive_lb_adversary(m);
      auto alg = make_algorithm(name);
      auto res = run(*alg, adv.instance, *adv.oracle);
      Rational need = R(m) * (harmonic(m) - Rational(1));
      if (R(res.report.wasted) < need)
        out.fail(std::string(name) + " additive m=" + std::to_string(m) + ": wasted " + std::to_string(res.report.wasted) +
                 " < " + need.str());
      if (std::string(name) == "bal") d << "additive m=" << m << " wasted " << res.report.wasted << " >= " << need << "; ";
    }
  if (out.ok) out.detail = d.str().substr(0, d.str().size() - 2);
  return out;
}

Outcome ac6() {
  Outcome out;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    std::size_t n = 4 + seed % 13;
    Generated g = gen_random(seed, RandomParams{n, 1, 1 + seed % 4, Overlap::Single, ProblemKind::SelectionValue, 0});
    std::size_t i = g.instance.rank();
    if (i > (n + 1) / 2) out.fail(seed_note("rank above ceil(n/2)", seed));
    auto res = run_fixed("sel-value", g);
    if (res.report.method != OptMethod::BruteForce) out.fail(seed_note("opt not brute force", seed));
    long bound = ceil_div(static_cast<long>(res.report.opt1 + i - 1), static_cast<long>(g.instance.k()));
    if (static_cast<long>(res.report.alg_rounds) > bound) out.fail(seed_note("rounds above ceil((opt1+i-1)/k)", seed));
  }
  for (std::size_t i = 1; i <= 8; ++i) {
    AdversaryRun adv = selection_value_lb_adversary(i);
    SelectionValueAlgorithm alg;
    auto res = run(alg, adv.instance, *adv.oracle);
    if (res.report.alg_queries < i || res.report.opt1 != 1)
      out.fail("value adversary i=" + std::to_string(i) + ": queries " + std::to_string(res.report.alg_queries) + ", opt1 " +
               std::to_string(res.report.opt1));
  }
  if (out.ok) out.detail = "500 random within ceil((opt1+i-1)/k); adversary i=1..8 forces i queries with opt1=1";
  return out;
}

Outcome ac7() {
  Outcome out;
  std::size_t rounds_checked = 0;
  auto check = [&](SelectionFullAlgorithm& alg, const RunResult& res, const std::string& label) {
    if (res.report.alg_rounds > 2 * res.report.opt_k) out.fail(label + ": rounds above 2 opt_k");
    for (const auto& c : alg.counts()) {
      ++rounds_checked;
      if (c.a < 1 || c.b + 1 > c.a) out.fail(label + ": category counts violate a >= 1, b <= a-1");
    }
    auto w = wasted_per_round(res.trace, res.report.opt_set);
    for (std::size_t r = 0; r + 1 < res.trace.rounds.size(); ++r)
      if (2 * w[r] > res.trace.rounds[r].ids.size()) out.fail(label + ": wasted above useful in a non-final round");
  };
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    Generated g = gen_random(seed, RandomParams{4 + seed % 12, 1, 1 + seed % 4, Overlap::Single, ProblemKind::SelectionFull, 0});
    SelectionFullAlgorithm alg;
    auto res = run(alg, g.instance, *fixed_oracle(g.instance, g.realization));
    check(alg, res, "seed " + std::to_string(seed));
  }
  for (std::size_t i = 2; i <= 6; ++i) {
    AdversaryRun adv = selection_full_lb_adversary(i);
    SelectionFullAlgorithm alg;
    auto res = run(alg, adv.instance, *adv.oracle);
    check(alg, res, "sel-full-lb i=" + std::to_string(i));
  }
  if (out.ok)
    out.detail = "505 runs (mixed open/closed endpoints), " + std::to_string(rounds_checked) + " round starts with a>=1, b<=a-1";
  return out;
}

Outcome ac8() {
  Outcome out;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    std::size_t n = 3 + seed % 10;
    std::size_t m = 1 + seed % 3;
    Overlap o = m == 1 ? Overlap::Single : (seed % 2 ? Overlap::Disjoint : Overlap::Overlapping);
    Generated gm = gen_random(seed, RandomParams{n, std::min(m, n), 2, o, ProblemKind::Minimum, 0});
    if (opt1_minimum(gm.instance, gm.realization).opt1 != opt1_bruteforce(gm.instance, gm.realization).opt1)
      out.fail(seed_note("Minimum closed form differs from brute force", seed));
    Generated gs = gen_random(seed, RandomParams{n, 1, 2, Overlap::Single, ProblemKind::SelectionFull, 0});
    if (opt1_selection_full(gs.instance, gs.realization).opt1 != opt1_bruteforce(gs.instance, gs.realization).opt1)
      out.fail(seed_note("Selection closed form differs from brute force", seed));
  }
  if (out.ok) out.detail = "1000 seeds x {Minimum, Selection}, n <= 12";
  return out;
}

Outcome ac9() {
  Outcome out;
  std::size_t runs = 0;
  // batches_to_rounds on the 2-batch, 2-query-competitive Sorting algorithm: alpha = 2, r = 2.
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    std::size_t m = 1 + seed % 3;
    Overlap o = m == 1 ? Overlap::Single : (seed % 2 ? Overlap::Disjoint : Overlap::Overlapping);
    Generated g = gen_random(seed, RandomParams{6 + seed % 10, m, 1 + seed % 5, o, ProblemKind::Sorting, 0});
    auto alg = batches_to_rounds(std::make_unique<SortingTwoBatch>());
    auto res = run(*alg, g.instance, *fixed_oracle(g.instance, g.realization));
    ++runs;
    if (res.report.alg_rounds > 2 * res.report.opt_k + 1) out.fail(seed_note("batches_to_rounds above 2 opt_k + 1", seed));
  }
  for (std::size_t c = 1; c <= 6; ++c) {
    AdversaryRun adv = sorting_pair_adversary(c, 2);
    auto alg = batches_to_rounds(std::make_unique<SortingTwoBatch>());
    auto res = run(*alg, adv.instance, *adv.oracle);
    ++runs;
    if (res.report.alg_rounds > 2 * res.report.opt_k + 1) out.fail("pairs c=" + std::to_string(c) + ": above 2 opt_k + 1");
  }
  // rounds_to_batches: never more than r batches.
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    std::size_t r = 2 + seed % 5;
    Rational alpha = Rational(1) + Rational(static_cast<long>(seed % 3), 2);
    std::size_t m = 1 + seed % 4;
    Overlap o = m == 1 ? Overlap::Single : (seed % 2 ? Overlap::Disjoint : Overlap::Overlapping);
    Generated g = gen_random(seed, RandomParams{8 + seed % 12, m, 1, o, ProblemKind::Minimum, 0});
    for (const char* name : {"bal", "budget"}) {
      RoundsToBatches alg([name] { return make_algorithm(name); }, alpha, r);
      auto rep = run_batches(alg, g.instance, *fixed_oracle(g.instance, g.realization));
      ++runs;
      if (!rep.solved || rep.batches > r) out.fail(seed_note(std::string(name) + " as batches exceeded r", seed));
    }
  }
  if (std::abs(w_inverse(2) - 2.0) > 1e-9) out.fail("W^-1(2) != 2");
  for (int i = 0; i < 1000; ++i) {
    double x = std::pow(2.0, 1.0 + 19.0 * i / 999.0);
    double y = w_inverse(x);
    double lg = std::log2(x);
    if (y + 1e-9 < x / lg || y > 2 * x / lg + 1e-9) out.fail("W^-1 outside [x/lg x, 2x/lg x] at x=" + std::to_string(x));
  }
  if (out.ok) out.detail = std::to_string(runs) + " reduction runs within bounds; W^-1 checked on 1000 points";
  return out;
}

}  // namespace

int main() {
  bool all = true;
  bool substitutes = true;
  auto report = [&](const char* id, const char* title, const std::function<Outcome()>& f, bool substitute) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << id << " " << (o.ok ? "PASS" : "FAIL") << "  " << title << ": " << o.detail << " [" << std::fixed
              << std::setprecision(1) << secs << "s]" << std::endl;
    all &= o.ok;
    if (substitute) substitutes &= o.ok;
  };
  report("AC1", "sorting ratio", ac1, false);
  report("AC2", "BAL additive bound", ac2, true);
  BudgetRuns b;
  report("AC3", "budget vs BAL", [&] {
    b = budget_suite();
    return b.ac3;
  }, true);
  report("AC4", "charging invariant", [&] { return b.ac4; }, true);
  report("AC5", "Minimum lower bounds", ac5, false);
  report("AC6", "Selection value", ac6, false);
  report("AC7", "Selection full", ac7, true);
  report("AC8", "oracle equivalence", ac8, false);
  report("AC9", "reductions and W^-1", ac9, false);
  report("AC10", "asymptotic bounds via property substitutes", [&] {
    Outcome o;
    if (!substitutes) o.fail("a substitute property suite failed");
    else o.detail = "per-round invariants and explicit-constant bounds of AC2, AC3, AC4, AC7 hold";
    return o;
  }, false);
  return all ? 0 : 1;
}
