#include "qround/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "qround/errors.hpp"

namespace qround {

ValueOracle::ValueOracle(Instance instance) : instance_(std::move(instance)), answered_(instance_.n()) {}

std::vector<Rational> ValueOracle::answer_round(const std::vector<ElementId>& round) {
  std::set<ElementId> seen;
  for (ElementId id : round) {
    if (id >= instance_.n()) throw OracleError("query of unknown element " + std::to_string(id + 1));
    if (!seen.insert(id).second) throw OracleError("element " + std::to_string(id + 1) + " queried twice in a round");
    if (answered_[id]) throw OracleError("element " + std::to_string(id + 1) + " queried again");
    if (instance_.element(id).is_trivial()) throw OracleError("trivial element " + std::to_string(id + 1) + " queried");
  }
  std::vector<Rational> out = decide(round);
  if (out.size() != round.size()) throw OracleError("oracle answered the wrong number of queries");
  for (std::size_t q = 0; q < round.size(); ++q) {
    if (!instance_.element(round[q]).contains(out[q]))
      throw OracleError(name() + " answered " + out[q].str() + " outside " + instance_.element(round[q]).str());
    answered_[round[q]] = out[q];
  }
  history_.push_back(round);
  return out;
}

Realization ValueOracle::finalize() {
  Realization r = complete();
  r.validate(instance_);
  for (ElementId i = 0; i < instance_.n(); ++i)
    if (answered_[i] && *answered_[i] != r.values[i])
      throw OracleError(name() + " finalized element " + std::to_string(i + 1) + " as " + r.values[i].str() +
                        " after answering " + answered_[i]->str());
  return r;
}

FixedOracle::FixedOracle(Instance instance, Realization r) : ValueOracle(std::move(instance)), realization_(std::move(r)) {
  realization_.validate(instance_);
}

std::vector<Rational> FixedOracle::decide(const std::vector<ElementId>& round) {
  std::vector<Rational> out;
  out.reserve(round.size());
  for (ElementId id : round) out.push_back(realization_.values[id]);
  return out;
}

std::unique_ptr<ValueOracle> fixed_oracle(const Instance& inst, const Realization& r) {
  return std::make_unique<FixedOracle>(inst, r);
}

namespace {

class PairAdversary : public ValueOracle {
 public:
  using ValueOracle::ValueOracle;
  std::string name() const override { return "fig1-pairs"; }

 protected:
  std::vector<Rational> decide(const std::vector<ElementId>& round) override {
    if (committed_.empty()) committed_.resize(instance_.n());
    std::set<ElementId> in_round(round.begin(), round.end());
    for (ElementId id : round) {
      if (committed_[id]) continue;
      ElementId a = id - id % 2;
      ElementId b = a + 1;
      Rational base(static_cast<long>(4 * (a / 2)));
      bool both = in_round.count(a) && in_round.count(b);
      if (both) {
        committed_[a] = base + Rational(1, 2);
        committed_[b] = base + Rational(5, 2);
      } else if (id == a) {
        committed_[a] = base + Rational(3, 2);
        committed_[b] = base + Rational(5, 2);
        note("pair " + std::to_string(a / 2 + 1) + ": A first, B forced");
      } else {
        committed_[b] = base + Rational(3, 2);
        committed_[a] = base + Rational(1, 2);
        note("pair " + std::to_string(a / 2 + 1) + ": B first, A forced");
      }
    }
    std::vector<Rational> out;
    for (ElementId id : round) out.push_back(*committed_[id]);
    return out;
  }

  Realization complete() override {
    Realization r;
    for (ElementId i = 0; i < instance_.n(); ++i) {
      Rational base(static_cast<long>(4 * (i / 2)));
      if (i < committed_.size() && committed_[i])
        r.values.push_back(*committed_[i]);
      else
        r.values.push_back(base + (i % 2 == 0 ? Rational(1, 2) : Rational(5, 2)));
    }
    return r;
  }

 private:
  std::vector<std::optional<Rational>> committed_;
};

/// Shared layout of the two Minimum lower-bound adversaries: m disjoint sets of L elements,
/// element t (1-based) of every set is (1+t*eps, 100+t*eps) with eps = 1/m.
class MinimumSetsAdversary : public ValueOracle {
 public:
  MinimumSetsAdversary(Instance inst, std::size_t m, std::size_t len)
      : ValueOracle(std::move(inst)), m_(m), len_(len), eps_(1, static_cast<long>(m)), min_at_(m) {}

 protected:
  /// Sets to solve this round, given per-set query counts of the round (active sets only).
  virtual std::vector<std::size_t> choose(const std::map<std::size_t, std::size_t>& counts) = 0;

  std::vector<Rational> decide(const std::vector<ElementId>& round) override {
    ++round_;
    std::map<std::size_t, std::size_t> counts;
    for (std::size_t s = 0; s < m_; ++s)
      if (!min_at_[s]) counts[s] = 0;
    std::map<std::size_t, std::size_t> leftmost;
    for (ElementId id : round) {
      std::size_t s = id / len_;
      std::size_t t = id % len_ + 1;
      if (min_at_[s]) continue;
      ++counts[s];
      auto it = leftmost.find(s);
      if (it == leftmost.end() || t < it->second) leftmost[s] = t;
    }
    if (!counts.empty()) {
      for (std::size_t s : choose(counts)) {
        auto it = leftmost.find(s);
        min_at_[s] = it != leftmost.end() ? it->second : first_unanswered(s);
      }
    }
    std::vector<Rational> out;
    for (ElementId id : round) out.push_back(value_of(id));
    return out;
  }

  Realization complete() override {
    for (std::size_t s = 0; s < m_; ++s)
      if (!min_at_[s]) min_at_[s] = first_unanswered(s);
    Realization r;
    for (ElementId i = 0; i < instance_.n(); ++i) r.values.push_back(value_of(i));
    return r;
  }

  std::size_t round_ = 0;

 private:
  std::size_t first_unanswered(std::size_t s) const {
    for (std::size_t t = 1; t <= len_; ++t)
      if (!answered_[s * len_ + t - 1]) return t;
    return len_;
  }

  Rational value_of(ElementId id) const {
    std::size_t s = id / len_;
    long t = static_cast<long>(id % len_ + 1);
    if (min_at_[s] && *min_at_[s] == static_cast<std::size_t>(t))
      return Rational(1) + (Rational(t) + Rational(1, 2)) * eps_;
    return Rational(100) + (Rational(t) - Rational(1, 2)) * eps_;
  }

  std::size_t m_;
  std::size_t len_;
  Rational eps_;
  std::vector<std::optional<std::size_t>> min_at_;
};

std::string join_sets(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + ("S" + std::to_string(v[i] + 1));
  return s;
}

class WlbAdversary : public MinimumSetsAdversary {
 public:
  WlbAdversary(Instance inst, std::size_t M, std::size_t m, std::size_t len)
      : MinimumSetsAdversary(std::move(inst), m, len), M_(M) {}
  std::string name() const override { return "wlb"; }

 protected:
  std::vector<std::size_t> choose(const std::map<std::size_t, std::size_t>& counts) override {
    std::vector<std::size_t> chosen;
    if (round_ >= M_) {
      for (const auto& [s, c] : counts) chosen.push_back(s);
      note("round " + std::to_string(round_) + ": solving all " + std::to_string(chosen.size()) + " remaining sets");
      return chosen;
    }
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (const auto& [s, c] : counts)
      if (c > 0) order.emplace_back(c, s);
    std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    const std::size_t k = instance_.k();
    std::size_t sum = 0;
    std::size_t idx = 0;
    while (idx < order.size() && sum * M_ < (M_ - 1) * k) {
      sum += order[idx].first;
      chosen.push_back(order[idx].second);
      ++idx;
    }
    bool tie = idx > 0 && idx < order.size() && order[idx].first == order[idx - 1].first;
    std::sort(chosen.begin(), chosen.end());
    note("round " + std::to_string(round_) + ": solving " + std::to_string(chosen.size()) + " sets covering " +
         std::to_string(sum) + " queries" + (tie ? " (equal counts broken by lowest set index)" : "") + ": " +
         join_sets(chosen));
    return chosen;
  }

 private:
  std::size_t M_;
};

class AdditiveAdversary : public MinimumSetsAdversary {
 public:
  using MinimumSetsAdversary::MinimumSetsAdversary;
  std::string name() const override { return "additive"; }

 protected:
  std::vector<std::size_t> choose(const std::map<std::size_t, std::size_t>& counts) override {
    std::size_t best = counts.begin()->first;
    for (const auto& [s, c] : counts)
      if (c > counts.at(best)) best = s;
    note("round " + std::to_string(round_) + ": solving S" + std::to_string(best + 1) + " with " +
         std::to_string(counts.at(best)) + " queries");
    return {best};
  }
};

Instance minimum_sets_instance(std::size_t m, std::size_t len, std::size_t k) {
  Rational eps(1, static_cast<long>(m));
  std::vector<UncertainInterval> elems;
  std::vector<ElementSet> sets;
  for (std::size_t s = 0; s < m; ++s) {
    ElementSet set{"S" + std::to_string(s + 1), {}};
    for (std::size_t t = 1; t <= len; ++t) {
      set.members.push_back(elems.size());
      Rational off = Rational(static_cast<long>(t)) * eps;
      elems.push_back(UncertainInterval::open(Rational(1) + off, Rational(100) + off));
    }
    sets.push_back(std::move(set));
  }
  return Instance(std::move(elems), std::move(sets), Problem{ProblemKind::Minimum, 0}, k);
}

class SelectionFullAdversary : public ValueOracle {
 public:
  SelectionFullAdversary(Instance inst, std::size_t i) : ValueOracle(std::move(inst)), i_(i) {}
  std::string name() const override { return "sel-full-lb"; }

 protected:
  std::vector<Rational> decide(const std::vector<ElementId>& round) override {
    const ElementId middle = 2 * (i_ - 1);
    if (!middle_) {
      bool has_middle = std::find(round.begin(), round.end(), middle) != round.end();
      if (!has_middle) {
        middle_ = Rational(4);
        note("round 1: middle skipped, middle = 4");
      } else {
        std::size_t left = 0;
        std::size_t right = 0;
        for (ElementId id : round) {
          if (id < i_ - 1) ++left;
          else if (id < middle) ++right;
        }
        middle_ = left > right ? Rational(11, 2) : Rational(5, 2);
        note("round 1: " + std::to_string(left) + " left, " + std::to_string(right) + " right, middle = " +
             middle_->str());
      }
    }
    std::vector<Rational> out;
    for (ElementId id : round) out.push_back(value_of(id));
    return out;
  }

  Realization complete() override {
    if (!middle_) middle_ = Rational(4);
    Realization r;
    for (ElementId id = 0; id < instance_.n(); ++id) r.values.push_back(value_of(id));
    return r;
  }

 private:
  Rational value_of(ElementId id) const {
    if (id < i_ - 1) return Rational(1);
    if (id < 2 * (i_ - 1)) return Rational(7);
    return *middle_;
  }

  std::size_t i_;
  std::optional<Rational> middle_;
};

class SelectionValueAdversary : public ValueOracle {
 public:
  SelectionValueAdversary(Instance inst, std::size_t i) : ValueOracle(std::move(inst)), i_(i) {}
  std::string name() const override { return "sel-value-lb"; }

 protected:
  std::vector<Rational> decide(const std::vector<ElementId>& round) override {
    std::vector<Rational> out;
    for (ElementId id : round) out.push_back(next_value(id));
    return out;
  }

  Realization complete() override {
    Realization r;
    for (ElementId id = 0; id < instance_.n(); ++id) {
      if (id >= i_) r.values.push_back(Rational(3));
      else if (answered_[id]) r.values.push_back(*answered_[id]);
      else r.values.push_back(next_value(id));
    }
    return r;
  }

 private:
  Rational next_value(ElementId) {
    ++given_;
    if (given_ < i_) return Rational(1);
    if (given_ == i_) note("last open interval answered 4");
    return Rational(4);
  }

  std::size_t i_;
  std::size_t given_ = 0;
};

}  // namespace


AdversaryRun sorting_pair_adversary(std::size_t c, std::size_t k) {
  if (c < 1 || k < 1) throw InvalidInstance("fig1-pairs needs c >= 1 and k >= 1");
  std::vector<UncertainInterval> elems;
  for (std::size_t p = 0; p < k * c; ++p) {
    long b = static_cast<long>(4 * p);
    elems.push_back(UncertainInterval::closed(Rational(b), Rational(b + 2)));
    elems.push_back(UncertainInterval::closed(Rational(b + 1), Rational(b + 3)));
  }
  Instance inst(std::move(elems), {}, Problem{ProblemKind::Sorting, 0}, k);
  auto oracle = std::make_unique<PairAdversary>(inst);
  return {std::move(inst), std::move(oracle)};
}

AdversaryRun minimum_wlb_adversary(std::size_t M) {
  if (M < 2 || M > 4) throw InvalidInstance("wlb needs 2 <= M <= 4");
  std::size_t m = 1;
  for (std::size_t i = 0; i < M; ++i) m *= M;
  std::size_t k = m * M;
  Instance inst = minimum_sets_instance(m, M * k, k);
  auto oracle = std::make_unique<WlbAdversary>(inst, M, m, M * k);
  return {std::move(inst), std::move(oracle)};
}

AdversaryRun minimum_additive_lb_adversary(std::size_t m) {
  if (m < 2) throw InvalidInstance("additive adversary needs m >= 2");
  Instance inst = minimum_sets_instance(m, m * m, m);
  auto oracle = std::make_unique<AdditiveAdversary>(inst, m, m * m);
  return {std::move(inst), std::move(oracle)};
}

AdversaryRun selection_full_lb_adversary(std::size_t i) {
  if (i < 2) throw InvalidInstance("sel-full-lb needs i >= 2");
  std::vector<UncertainInterval> elems;
  for (std::size_t j = 0; j + 1 < i; ++j) elems.push_back(UncertainInterval::closed(Rational(0), Rational(3)));
  for (std::size_t j = 0; j + 1 < i; ++j) elems.push_back(UncertainInterval::closed(Rational(5), Rational(8)));
  elems.push_back(UncertainInterval::closed(Rational(2), Rational(6)));
  Instance inst(std::move(elems), {}, Problem{ProblemKind::SelectionFull, i}, i);
  auto oracle = std::make_unique<SelectionFullAdversary>(inst, i);
  return {std::move(inst), std::move(oracle)};
}

AdversaryRun selection_value_lb_adversary(std::size_t i, std::size_t k) {
  if (i < 1) throw InvalidInstance("sel-value-lb needs i >= 1");
  std::vector<UncertainInterval> elems;
  for (std::size_t j = 0; j < i; ++j) elems.push_back(UncertainInterval::open(Rational(0), Rational(5)));
  for (std::size_t j = 0; j < i; ++j) elems.push_back(UncertainInterval::point(Rational(3)));
  Instance inst(std::move(elems), {}, Problem{ProblemKind::SelectionValue, i}, k ? k : i);
  auto oracle = std::make_unique<SelectionValueAdversary>(inst, i);
  return {std::move(inst), std::move(oracle)};
}

}  // namespace qround
