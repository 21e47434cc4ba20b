#include <algorithm>

#include "qround/algorithms.hpp"
#include "qround/errors.hpp"
#include "qround/solvedness.hpp"

namespace qround {

std::vector<ElementId> SelectionValueAlgorithm::next_round(const Instance& inst, const KnowledgeState& K) {
  const std::size_t rank = inst.rank();
  if (selection_solved(K, rank, ProblemKind::SelectionValue)) return {};
  auto bounds = selection_bounds(K, rank);
  std::vector<ElementId> cands;
  for (ElementId id = 0; id < inst.n(); ++id) {
    const auto& iv = K.effective(id);
    if (!K.is_known(id) && iv.hi() > bounds.lower && iv.lo() < bounds.upper) cands.push_back(id);
  }
  const bool mirrored = rank > (inst.n() + 1) / 2;
  std::sort(cands.begin(), cands.end(), [&](ElementId a, ElementId b) {
    const auto& x = K.effective(a);
    const auto& y = K.effective(b);
    int c = mirrored ? -compare_upper(x, y) : compare_lower(x, y);
    return c != 0 ? c < 0 : a < b;
  });
  if (cands.size() > inst.k()) cands.resize(inst.k());
  return cands;
}

UncertainInterval target_area(const KnowledgeState& K, std::size_t rank) {
  std::vector<ElementId> by_lower(K.size());
  for (ElementId i = 0; i < K.size(); ++i) by_lower[i] = i;
  auto by_upper = by_lower;
  std::sort(by_lower.begin(), by_lower.end(), [&](ElementId a, ElementId b) {
    int c = compare_lower(K.effective(a), K.effective(b));
    return c != 0 ? c < 0 : a < b;
  });
  std::sort(by_upper.begin(), by_upper.end(), [&](ElementId a, ElementId b) {
    int c = compare_upper(K.effective(a), K.effective(b));
    return c != 0 ? c < 0 : a < b;
  });
  const auto& l = K.effective(by_lower.at(rank - 1));
  const auto& u = K.effective(by_upper.at(rank - 1));
  try {
    return UncertainInterval(l.lo(), l.lo_kind(), u.hi(), u.hi_kind());
  } catch (const Error&) {
    throw InternalError("empty target area");
  }
}

Categories classify(const KnowledgeState& K, std::size_t rank) {
  Categories out{target_area(K, rank), {}, {}};
  const auto& ta = out.target;
  for (ElementId id = 0; id < K.size(); ++id) {
    const auto& iv = K.effective(id);
    if (!intersects(iv, ta)) continue;
    int cl = compare_lower(iv, ta);
    int cu = compare_upper(iv, ta);
    bool known = K.is_known(id);
    int cat;
    if (cl <= 0 && cu >= 0) {
      if (known) continue;
      cat = 0;
      ++out.counts.a;
    } else if (cl > 0 && cu < 0) {
      cat = 1;
      ++out.counts.b;
    } else if (cl <= 0) {
      cat = 2;
      ++out.counts.c;
    } else {
      cat = 3;
      ++out.counts.d;
    }
    if (!known) out.cat[cat].push_back(id);
  }
  std::sort(out.cat[2].begin(), out.cat[2].end(), [&](ElementId a, ElementId b) {
    int c = compare_upper(K.effective(a), K.effective(b));
    return c != 0 ? c > 0 : a < b;
  });
  std::sort(out.cat[3].begin(), out.cat[3].end(), [&](ElementId a, ElementId b) {
    int c = compare_lower(K.effective(a), K.effective(b));
    return c != 0 ? c < 0 : a < b;
  });
  return out;
}

void SelectionFullAlgorithm::reset(const Instance& inst) {
  RoundAlgorithm::reset(inst);
  counts_.clear();
}

std::vector<ElementId> SelectionFullAlgorithm::next_round(const Instance& inst, const KnowledgeState& K) {
  const std::size_t k = inst.k();
  if (selection_solved(K, inst.rank(), ProblemKind::SelectionFull)) return {};
  Categories cats = classify(K, inst.rank());
  counts_.push_back(cats.counts);
  note("round " + std::to_string(counts_.size()) + ": target " + cats.target.str() + " a=" + std::to_string(cats.counts.a) +
       " b=" + std::to_string(cats.counts.b) + " c=" + std::to_string(cats.counts.c) + " d=" + std::to_string(cats.counts.d));
  std::vector<ElementId> round;
  for (int c = 0; c < 2; ++c)
    for (ElementId id : cats.cat[c])
      if (round.size() < k) round.push_back(id);
  std::size_t i3 = 0;
  std::size_t i4 = 0;
  bool take3 = true;
  while (round.size() < k && (i3 < cats.cat[2].size() || i4 < cats.cat[3].size())) {
    if ((take3 && i3 < cats.cat[2].size()) || i4 >= cats.cat[3].size())
      round.push_back(cats.cat[2][i3++]);
    else
      round.push_back(cats.cat[3][i4++]);
    take3 = !take3;
  }
  if (round.empty()) throw InternalError("selection-full: unsolved but every category is empty");
  return round;
}

}  // namespace qround
