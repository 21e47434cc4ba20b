#include "qround/solvedness.hpp"

#include <algorithm>
#include <sstream>

#include "qround/errors.hpp"

namespace qround {

bool sorting_set_solved(const Instance& inst, std::size_t set, const KnowledgeState& K) {
  const auto& mem = inst.set(set).members;
  for (std::size_t a = 0; a < mem.size(); ++a)
    for (std::size_t b = a + 1; b < mem.size(); ++b)
      if (dependent(K.effective(mem[a]), K.effective(mem[b]))) return false;
  return true;
}

namespace {

std::optional<Rational> min_known(const Instance& inst, std::size_t set, const KnowledgeState& K) {
  std::optional<Rational> best;
  for (ElementId id : inst.set(set).members)
    if (K.is_known(id)) {
      const Rational& v = K.effective(id).lo();
      if (!best || v < *best) best = v;
    }
  return best;
}

}  // namespace

bool minimum_set_solved(const Instance& inst, std::size_t set, const KnowledgeState& K) {
  auto best = min_known(inst, set, K);
  if (!best) return false;
  for (ElementId id : inst.set(set).members)
    if (!K.is_known(id) && K.effective(id).lo() < *best) return false;
  return true;
}

std::vector<ElementId> minimum_discard(const Instance& inst, std::size_t set, const KnowledgeState& K) {
  const auto& mem = inst.set(set).members;
  auto best = min_known(inst, set, K);
  // Smallest and second smallest right endpoint, so each element can be compared with the others.
  std::optional<Rational> hi1;
  std::optional<Rational> hi2;
  ElementId hi1_id = 0;
  for (ElementId id : mem) {
    const Rational& h = K.effective(id).hi();
    if (!hi1 || h < *hi1) {
      hi2 = hi1;
      hi1 = h;
      hi1_id = id;
    } else if (!hi2 || h < *hi2) {
      hi2 = h;
    }
  }
  std::vector<ElementId> out;
  for (ElementId id : mem) {
    if (K.is_known(id)) continue;
    const Rational& lo = K.effective(id).lo();
    const auto& other = id == hi1_id ? hi2 : hi1;
    if ((best && lo >= *best) || (other && lo >= *other)) out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementId> minimum_candidates(const Instance& inst, std::size_t set, const KnowledgeState& K) {
  auto gone = minimum_discard(inst, set, K);
  std::vector<ElementId> out;
  for (ElementId id : inst.set(set).members)
    if (!K.is_known(id) && !std::binary_search(gone.begin(), gone.end(), id)) out.push_back(id);
  std::sort(out.begin(), out.end(), [&](ElementId a, ElementId b) {
    int c = compare_lower(K.effective(a), K.effective(b));
    return c != 0 ? c < 0 : a < b;
  });
  return out;
}

SelectionBounds selection_bounds(const KnowledgeState& K, std::size_t rank) {
  std::vector<Rational> lo;
  std::vector<Rational> hi;
  for (ElementId id = 0; id < K.size(); ++id) {
    lo.push_back(K.effective(id).lo());
    hi.push_back(K.effective(id).hi());
  }
  if (rank < 1 || rank > lo.size()) throw InternalError("selection rank out of range");
  std::nth_element(lo.begin(), lo.begin() + static_cast<long>(rank - 1), lo.end());
  std::nth_element(hi.begin(), hi.begin() + static_cast<long>(rank - 1), hi.end());
  return {lo[rank - 1], hi[rank - 1]};
}

bool selection_solved(const KnowledgeState& K, std::size_t rank, ProblemKind variant) {
  auto b = selection_bounds(K, rank);
  if (!b.pinned()) return false;
  if (variant == ProblemKind::SelectionValue) return true;
  for (ElementId id = 0; id < K.size(); ++id)
    if (!K.is_known(id) && K.effective(id).contains(b.lower)) return false;
  return true;
}

bool set_solved(const Instance& inst, std::size_t set, const KnowledgeState& K) {
  switch (inst.kind()) {
    case ProblemKind::Sorting: return sorting_set_solved(inst, set, K);
    case ProblemKind::Minimum: return minimum_set_solved(inst, set, K);
    case ProblemKind::SelectionValue:
    case ProblemKind::SelectionFull: return selection_solved(K, inst.rank(), inst.kind());
  }
  return false;
}

bool instance_solved(const Instance& inst, const KnowledgeState& K) {
  if (inst.problem().is_selection()) return selection_solved(K, inst.rank(), inst.kind());
  for (std::size_t s = 0; s < inst.m(); ++s)
    if (!set_solved(inst, s, K)) return false;
  return true;
}

std::string SolutionCertificate::str() const {
  std::ostringstream os;
  switch (kind) {
    case ProblemKind::Sorting:
      for (std::size_t s = 0; s < orders.size(); ++s) {
        os << "order S" << s + 1 << ":";
        for (ElementId id : orders[s]) os << " " << id + 1;
        os << "\n";
      }
      break;
    case ProblemKind::Minimum:
      for (std::size_t s = 0; s < minima.size(); ++s)
        os << "min S" << s + 1 << ": element " << minima[s].first + 1 << " = " << minima[s].second << "\n";
      break;
    case ProblemKind::SelectionValue:
      os << "v* = " << *vstar << "\n";
      break;
    case ProblemKind::SelectionFull:
      os << "v* = " << *vstar << "; equal:";
      for (ElementId id : equal_ids) os << " " << id + 1;
      os << "\n";
      break;
  }
  return os.str();
}

SolutionCertificate extract_certificate(const Instance& inst, const KnowledgeState& K) {
  if (!instance_solved(inst, K)) throw InternalError("certificate requested for an unsolved instance");
  SolutionCertificate c;
  c.kind = inst.kind();
  switch (inst.kind()) {
    case ProblemKind::Sorting:
      for (const auto& set : inst.sets()) {
        auto order = set.members;
        std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
          const auto& x = K.effective(a);
          const auto& y = K.effective(b);
          if (x.lo() != y.lo()) return x.lo() < y.lo();
          if (x.hi() != y.hi()) return x.hi() < y.hi();
          return a < b;
        });
        c.orders.push_back(std::move(order));
      }
      break;
    case ProblemKind::Minimum:
      for (const auto& set : inst.sets()) {
        std::optional<std::pair<ElementId, Rational>> best;
        for (ElementId id : set.members)
          if (K.is_known(id) && (!best || K.effective(id).lo() < best->second || (K.effective(id).lo() == best->second && id < best->first)))
            best = std::make_pair(id, K.effective(id).lo());
        c.minima.push_back(*best);
      }
      break;
    case ProblemKind::SelectionValue:
    case ProblemKind::SelectionFull: {
      auto b = selection_bounds(K, inst.rank());
      c.vstar = b.lower;
      if (inst.kind() == ProblemKind::SelectionFull)
        for (ElementId id = 0; id < inst.n(); ++id)
          if (K.is_known(id) && K.effective(id).lo() == b.lower) c.equal_ids.push_back(id);
      break;
    }
  }
  return c;
}

std::string verify_certificate(const Instance& inst, const SolutionCertificate& cert, const Realization& r) {
  if (cert.kind != inst.kind()) return "certificate is for a different problem";
  switch (inst.kind()) {
    case ProblemKind::Sorting:
      if (cert.orders.size() != inst.m()) return "wrong number of orders";
      for (std::size_t s = 0; s < inst.m(); ++s) {
        auto a = cert.orders[s];
        auto b = inst.set(s).members;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return "order of S" + std::to_string(s + 1) + " is not a permutation of the set";
        for (std::size_t j = 1; j < cert.orders[s].size(); ++j)
          if (r[cert.orders[s][j - 1]] > r[cert.orders[s][j]])
            return "order of S" + std::to_string(s + 1) + " is not sorted at position " + std::to_string(j);
      }
      return {};
    case ProblemKind::Minimum:
      if (cert.minima.size() != inst.m()) return "wrong number of minima";
      for (std::size_t s = 0; s < inst.m(); ++s) {
        Rational best = r[inst.set(s).members.front()];
        for (ElementId id : inst.set(s).members) best = std::min(best, r[id]);
        const auto& [id, v] = cert.minima[s];
        if (v != best || r[id] != v) return "minimum of S" + std::to_string(s + 1) + " is wrong";
      }
      return {};
    case ProblemKind::SelectionValue:
    case ProblemKind::SelectionFull: {
      auto vals = r.values;
      std::nth_element(vals.begin(), vals.begin() + static_cast<long>(inst.rank() - 1), vals.end());
      const Rational& v = vals[inst.rank() - 1];
      if (!cert.vstar || *cert.vstar != v) return "selected value is wrong";
      if (inst.kind() == ProblemKind::SelectionFull) {
        std::vector<ElementId> eq;
        for (ElementId id = 0; id < inst.n(); ++id)
          if (r[id] == v) eq.push_back(id);
        if (eq != cert.equal_ids) return "elements equal to v* are wrong";
      }
      return {};
    }
  }
  return "unknown problem";
}

KnowledgeState knowledge_after(const Instance& inst, const Realization& r, const std::vector<ElementId>& queried) {
  KnowledgeState K = inst.initial_knowledge();
  for (ElementId id : queried) K.reveal(id, r[id]);
  return K;
}

}  // namespace qround
