#include "qround/algorithms.hpp"

#include <algorithm>
#include <set>

#include "qround/errors.hpp"
#include "qround/solvedness.hpp"

namespace qround {

namespace {

std::string cover_mode_name(CoverMode m) {
  switch (m) {
    case CoverMode::IntervalExact: return "interval-exact";
    case CoverMode::GeneralExact: return "general-exact";
    case CoverMode::Matching: return "matching";
  }
  return "?";
}

/// Candidate list of a set with a cursor past the elements already in Q.
struct SetCursor {
  std::vector<ElementId> list;
  std::size_t pos = 0;

  void skip(const std::set<ElementId>& q) {
    while (pos < list.size() && q.count(list[pos])) ++pos;
  }
  bool available() const { return pos < list.size(); }
  ElementId next() const { return list[pos]; }
};

}  // namespace

std::string SortingCoverAlgorithm::name() const {
  return mode_ && *mode_ == CoverMode::Matching ? "sorting-matching" : "sorting-vc";
}

void SortingCoverAlgorithm::reset(const Instance& inst) {
  RoundAlgorithm::reset(inst);
  queue_.clear();
  pos_ = 0;
  started_ = false;
}

std::vector<ElementId> SortingCoverAlgorithm::initial_cover(const Instance& inst, const KnowledgeState& K,
                                                            CoverMode mode) {
  DependencyGraph g = dependency_graph(inst, K);
  std::vector<ElementId> cover;
  if (mode == CoverMode::Matching) {
    for (ElementId v : min_vertex_cover(g, mode, K))
      if (!K.is_known(v)) cover.push_back(v);
    return cover;
  }
  // Neighbours of known points must be queried anyway; cover the rest optimally.
  std::set<ElementId> forced;
  for (const auto& [a, b] : g.edges) {
    if (K.is_known(a) && !K.is_known(b)) forced.insert(b);
    if (K.is_known(b) && !K.is_known(a)) forced.insert(a);
  }
  auto rest_of = [&](const DependencyGraph& src) {
    DependencyGraph r;
    for (ElementId v : src.vertices)
      if (!K.is_known(v) && !forced.count(v)) r.vertices.push_back(v);
    for (const auto& e : src.edges)
      if (!K.is_known(e.first) && !K.is_known(e.second) && !forced.count(e.first) && !forced.count(e.second))
        r.edges.push_back(e);
    return r;
  };
  cover.assign(forced.begin(), forced.end());
  if (mode == CoverMode::IntervalExact) {
    if (!inst.disjoint_family()) throw InvalidInstance("interval-exact cover needs a disjoint family");
    for (std::size_t s = 0; s < inst.m(); ++s) {
      auto part = min_vertex_cover(rest_of(dependency_graph(inst, s, K)), mode, K);
      cover.insert(cover.end(), part.begin(), part.end());
    }
  } else {
    auto part = min_vertex_cover(rest_of(g), mode, K);
    cover.insert(cover.end(), part.begin(), part.end());
  }
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  return cover;
}

std::vector<ElementId> SortingCoverAlgorithm::point_dependents(const Instance& inst, const KnowledgeState& K) {
  std::set<ElementId> out;
  for (const auto& set : inst.sets())
    for (ElementId a : set.members) {
      if (!K.is_known(a)) continue;
      for (ElementId b : set.members)
        if (!K.is_known(b) && dependent(K.effective(a), K.effective(b))) out.insert(b);
    }
  return {out.begin(), out.end()};
}

std::vector<ElementId> SortingCoverAlgorithm::next_round(const Instance& inst, const KnowledgeState& K) {
  if (instance_solved(inst, K)) return {};
  if (!started_) {
    CoverMode mode = mode_ ? *mode_ : (inst.disjoint_family() ? CoverMode::IntervalExact : CoverMode::GeneralExact);
    queue_ = initial_cover(inst, K, mode);
    started_ = true;
    note("cover (" + cover_mode_name(mode) + "): " + std::to_string(queue_.size()) + " elements");
  }
  std::vector<ElementId> round;
  while (pos_ < queue_.size() && round.size() < inst.k()) {
    ElementId v = queue_[pos_++];
    if (!K.is_known(v)) round.push_back(v);
  }
  if (!round.empty()) return round;
  for (ElementId v : point_dependents(inst, K)) {
    if (round.size() == inst.k()) break;
    round.push_back(v);
  }
  return round;
}

std::vector<ElementId> MinimumSingleAlgorithm::next_round(const Instance& inst, const KnowledgeState& K) {
  if (inst.m() != 1) throw InvalidInstance("min-single needs exactly one set");
  if (minimum_set_solved(inst, 0, K)) return {};
  auto cands = minimum_candidates(inst, 0, K);
  if (cands.size() > inst.k()) cands.resize(inst.k());
  return cands;
}

std::vector<ElementId> BalancedAlgorithm::next_round(const Instance& inst, const KnowledgeState& K) {
  std::vector<std::size_t> active;
  std::vector<SetCursor> cur(inst.m());
  for (std::size_t s = 0; s < inst.m(); ++s)
    if (!minimum_set_solved(inst, s, K)) {
      active.push_back(s);
      cur[s].list = minimum_candidates(inst, s, K);
    }
  std::set<ElementId> q;
  std::vector<ElementId> round;
  while (round.size() < inst.k()) {
    std::optional<std::size_t> best;
    for (std::size_t s : active) {
      cur[s].skip(q);
      if (!cur[s].available()) continue;
      if (!best || cur[s].pos < cur[*best].pos) best = s;
    }
    if (!best) break;
    ElementId e = cur[*best].next();
    q.insert(e);
    round.push_back(e);
  }
  return round;
}

void RoundRobinBalancedAlgorithm::reset(const Instance& inst) {
  RoundAlgorithm::reset(inst);
  cursor_ = inst.m() - 1;
}

std::vector<ElementId> RoundRobinBalancedAlgorithm::next_round(const Instance& inst, const KnowledgeState& K) {
  const std::size_t m = inst.m();
  std::vector<bool> active(m, false);
  std::vector<SetCursor> cur(m);
  for (std::size_t s = 0; s < m; ++s)
    if (!minimum_set_solved(inst, s, K)) {
      active[s] = true;
      cur[s].list = minimum_candidates(inst, s, K);
    }
  std::set<ElementId> q;
  std::vector<ElementId> round;
  while (round.size() < inst.k()) {
    std::optional<std::size_t> found;
    for (std::size_t step = 1; step <= m; ++step) {
      std::size_t s = (cursor_ + step) % m;
      if (!active[s]) continue;
      cur[s].skip(q);
      if (cur[s].available()) {
        found = s;
        break;
      }
    }
    if (!found) break;
    cursor_ = *found;
    ElementId e = cur[cursor_].next();
    q.insert(e);
    round.push_back(e);
  }
  return round;
}

std::unique_ptr<RoundAlgorithm> make_algorithm(const std::string& name) {
  if (name == "sorting-vc") return std::make_unique<SortingCoverAlgorithm>();
  if (name == "sorting-matching") return std::make_unique<SortingCoverAlgorithm>(CoverMode::Matching);
  if (name == "min-single") return std::make_unique<MinimumSingleAlgorithm>();
  if (name == "bal") return std::make_unique<BalancedAlgorithm>();
  if (name == "bal-rr") return std::make_unique<RoundRobinBalancedAlgorithm>();
  if (name == "budget") return std::make_unique<BudgetAlgorithm>();
  if (name == "sel-value") return std::make_unique<SelectionValueAlgorithm>();
  if (name == "sel-full") return std::make_unique<SelectionFullAlgorithm>();
  throw Error("unknown algorithm '" + name + "'");
}

std::vector<std::string> algorithm_names() {
  return {"sorting-vc", "sorting-matching", "min-single", "bal", "bal-rr", "budget", "sel-value", "sel-full"};
}

}  // namespace qround
