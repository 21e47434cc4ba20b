#include <algorithm>
#include <map>
#include <set>

#include "qround/algorithms.hpp"
#include "qround/solvedness.hpp"

namespace qround {

void BudgetAlgorithm::reset(const Instance& inst) {
  RoundAlgorithm::reset(inst);
  charges_.clear();
}

std::vector<ElementId> BudgetAlgorithm::next_round(const Instance& inst, const KnowledgeState& K) {
  charges_.emplace_back();
  auto& charged = charges_.back();
  const std::size_t k = inst.k();
  std::vector<std::size_t> active;
  std::vector<std::vector<ElementId>> lists(inst.m());
  std::vector<std::size_t> pos(inst.m(), 0);
  for (std::size_t s = 0; s < inst.m(); ++s)
    if (!minimum_set_solved(inst, s, K)) {
      active.push_back(s);
      lists[s] = minimum_candidates(inst, s, K);
    }
  std::set<ElementId> seeds;
  for (std::size_t s : active)
    if (!lists[s].empty()) seeds.insert(lists[s].front());
  std::vector<ElementId> round(seeds.begin(), seeds.end());
  if (round.size() >= k) {
    round.resize(k);
    return round;
  }
  std::set<ElementId> q(seeds.begin(), seeds.end());
  std::map<std::size_t, Rational> b;
  for (std::size_t s : active) b[s] = Rational(0);
  while (round.size() < k) {
    // F_e: active sets whose leftmost candidate outside Q is e.
    std::map<ElementId, std::vector<std::size_t>> F;
    for (std::size_t s : active) {
      while (pos[s] < lists[s].size() && q.count(lists[s][pos[s]])) ++pos[s];
      if (pos[s] < lists[s].size()) F[lists[s][pos[s]]].push_back(s);
    }
    if (F.empty()) break;
    std::optional<ElementId> best;
    Rational best_t;
    for (const auto& [e, sets] : F) {
      Rational sum(0);
      for (std::size_t s : sets) sum += b[s];
      Rational t = (Rational(1) - sum) / Rational(static_cast<long>(sets.size()));
      bool better = !best || t < best_t || (t == best_t && sets.size() > F[*best].size());
      if (better) {
        best = e;
        best_t = t;
      }
    }
    for (auto& [s, v] : b) v += best_t;
    Charge c;
    c.element = *best;
    for (std::size_t s : F[*best]) {
      c.payers.emplace_back(s, b[s]);
      b[s] = Rational(0);
    }
    std::string line = "round " + std::to_string(charges_.size()) + ": element " + std::to_string(*best + 1) + " charged to";
    for (const auto& [s, amt] : c.payers) line += " S" + std::to_string(s + 1) + "=" + amt.str();
    note(std::move(line));
    charged.push_back(std::move(c));
    q.insert(*best);
    round.push_back(*best);
  }
  return round;
}

}  // namespace qround
