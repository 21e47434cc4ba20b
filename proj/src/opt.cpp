#include "qround/opt.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qround/errors.hpp"
#include "qround/solvedness.hpp"

namespace qround {

std::string opt_method_name(OptMethod m) { return m == OptMethod::ClosedForm ? "closed-form" : "brute-force"; }

namespace {

OptReport make_report(const Instance& inst, std::vector<ElementId> set, OptMethod method) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  OptReport rep;
  rep.opt1 = set.size();
  rep.opt_set = std::move(set);
  rep.opt_k = static_cast<std::size_t>(ceil_div(static_cast<long>(rep.opt1), static_cast<long>(inst.k())));
  rep.method = method;
  return rep;
}

Rational ith_smallest(std::vector<Rational> vals, std::size_t rank) {
  std::nth_element(vals.begin(), vals.begin() + static_cast<long>(rank - 1), vals.end());
  return vals[rank - 1];
}

/// Lexicographically first subset of minimum size among `cands` that satisfies `ok`.
std::vector<ElementId> search(const std::vector<ElementId>& cands, const std::function<bool(const std::vector<ElementId>&)>& ok) {
  const std::size_t n = cands.size();
  std::vector<ElementId> chosen;
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      chosen.clear();
      for (std::size_t i : idx) chosen.push_back(cands[i]);
      if (ok(chosen)) return chosen;
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw InternalError("no feasible query set exists");
}

}  // namespace

bool feasible(const Instance& inst, const Realization& r, const std::vector<ElementId>& queried) {
  KnowledgeState K = inst.initial_knowledge();
  for (ElementId id : queried)
    if (!inst.element(id).is_trivial()) K.reveal(id, r[id]);
  return instance_solved(inst, K);
}

OptReport opt1_minimum(const Instance& inst, const Realization& r) {
  if (inst.kind() != ProblemKind::Minimum) throw InvalidInstance("opt1_minimum needs a minimum instance");
  std::vector<ElementId> out;
  for (const auto& set : inst.sets()) {
    Rational best = r[set.members.front()];
    for (ElementId id : set.members) best = std::min(best, r[id]);
    for (ElementId id : set.members)
      if (!inst.element(id).is_trivial() && inst.element(id).lo() < best) out.push_back(id);
  }
  return make_report(inst, std::move(out), OptMethod::ClosedForm);
}

OptReport opt1_selection_full(const Instance& inst, const Realization& r) {
  if (inst.kind() != ProblemKind::SelectionFull) throw InvalidInstance("opt1_selection_full needs a selection-full instance");
  Rational v = ith_smallest(r.values, inst.rank());
  std::vector<ElementId> out;
  for (ElementId id = 0; id < inst.n(); ++id)
    if (!inst.element(id).is_trivial() && inst.element(id).contains(v)) out.push_back(id);
  return make_report(inst, std::move(out), OptMethod::ClosedForm);
}

OptReport opt1_bruteforce(const Instance& inst, const Realization& r, std::size_t cap) {
  std::vector<ElementId> out;
  if (inst.kind() == ProblemKind::Sorting) {
    // Dependencies only disappear under queries, so components of the initial graph never interact.
    const std::size_t n = inst.n();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& set : inst.sets())
      for (std::size_t a = 0; a < set.members.size(); ++a)
        for (std::size_t b = a + 1; b < set.members.size(); ++b)
          if (dependent(inst.element(set.members[a]), inst.element(set.members[b])))
            parent[find(set.members[a])] = find(set.members[b]);
    std::vector<std::vector<ElementId>> comps(n);
    for (ElementId id = 0; id < n; ++id) comps[find(id)].push_back(id);
    for (const auto& comp : comps) {
      if (comp.size() < 2) continue;
      std::vector<ElementId> cands;
      for (ElementId id : comp)
        if (!inst.element(id).is_trivial()) cands.push_back(id);
      if (cands.size() > cap)
        throw CapExceeded("dependency component with " + std::to_string(cands.size()) + " candidates exceeds cap " +
                          std::to_string(cap));
      std::vector<std::pair<ElementId, ElementId>> pairs;
      for (const auto& set : inst.sets())
        for (std::size_t a = 0; a < set.members.size(); ++a)
          for (std::size_t b = a + 1; b < set.members.size(); ++b) {
            ElementId x = set.members[a];
            ElementId y = set.members[b];
            if (find(x) == find(comp.front()) && dependent(inst.element(x), inst.element(y))) pairs.emplace_back(x, y);
          }
      auto ok = [&](const std::vector<ElementId>& q) {
        auto eff = [&](ElementId id) {
          return std::find(q.begin(), q.end(), id) != q.end() ? UncertainInterval(r[id]) : inst.element(id);
        };
        for (const auto& [x, y] : pairs)
          if (dependent(eff(x), eff(y))) return false;
        return true;
      };
      auto best = search(cands, ok);
      out.insert(out.end(), best.begin(), best.end());
    }
  } else {
    std::vector<ElementId> cands;
    for (ElementId id = 0; id < inst.n(); ++id)
      if (!inst.element(id).is_trivial()) cands.push_back(id);
    if (cands.size() > cap)
      throw CapExceeded(std::to_string(cands.size()) + " non-trivial elements exceed brute-force cap " + std::to_string(cap));
    out = search(cands, [&](const std::vector<ElementId>& q) { return feasible(inst, r, q); });
  }
  return make_report(inst, std::move(out), OptMethod::BruteForce);
}

OptReport canonical_opt(const Instance& inst, const Realization& r, std::size_t cap) {
  switch (inst.kind()) {
    case ProblemKind::Minimum: return opt1_minimum(inst, r);
    case ProblemKind::SelectionFull: return opt1_selection_full(inst, r);
    default: return opt1_bruteforce(inst, r, cap);
  }
}

}  // namespace qround
