#include "qround/generators.hpp"

#include <algorithm>
#include <numeric>

#include "qround/errors.hpp"

namespace qround {

Generated gen_fig2_bal_instance() {
  const Rational delta(1, 10);
  const std::size_t sizes[3] = {6, 6, 5};
  const std::size_t prefix[3] = {3, 3, 5};
  std::vector<UncertainInterval> elems;
  std::vector<ElementSet> sets;
  Realization r;
  for (std::size_t s = 0; s < 3; ++s) {
    ElementSet set{"S" + std::to_string(s + 1), {}};
    for (std::size_t t = 1; t <= sizes[s]; ++t) {
      Rational off = delta * Rational(static_cast<long>(t));
      set.members.push_back(elems.size());
      elems.push_back(UncertainInterval::open(Rational(1) + off, Rational(100) + off));
      Rational half = delta * Rational(1, 2);
      if (t == prefix[s])
        r.values.push_back(Rational(1) + off + half);
      else
        r.values.push_back(Rational(100) + off - half);
    }
    sets.push_back(std::move(set));
  }
  Instance inst(std::move(elems), std::move(sets), Problem{ProblemKind::Minimum, 0}, 5);
  r.validate(inst);
  return {std::move(inst), std::move(r)};
}

Generated gen_fig3_overlap_instance(std::size_t k, std::size_t c) {
  if (k < 2) throw InvalidInstance("fig3 needs k >= 2");
  if (c < 1) throw InvalidInstance("fig3 needs c >= 1");
  const std::size_t m = c * (k - 1);
  const std::size_t n = c * k;
  const Rational delta(1, static_cast<long>(2 * m));
  std::vector<UncertainInterval> elems(n);
  Realization r;
  r.values.resize(n);
  std::vector<ElementSet> sets;
  std::vector<ElementId> shared;
  for (std::size_t g = 1; g <= c; ++g) {
    ElementId x = (g - 1) * k;
    Rational lo = delta * Rational(static_cast<long>(g - 1));
    elems[x] = UncertainInterval::open(lo, lo + Rational(1));
    const Rational vx = Rational(1, 2) + Rational(static_cast<long>(c - g + 1)) * delta / Rational(2);
    r.values[x] = vx;
    shared.push_back(x);
    // Unique elements start at the group's minimum value: not needed by OPT,
    // yet still live until x itself is revealed.
    for (std::size_t u = 1; u < k; ++u) {
      ElementId id = x + u;
      elems[id] = UncertainInterval::open(vx, vx + Rational(1));
      r.values[id] = vx + Rational(1, 2) + Rational(static_cast<long>(id + 1), static_cast<long>(4 * (n + 1)));
      ElementSet set{"S" + std::to_string(sets.size() + 1), shared};
      set.members.push_back(id);
      sets.push_back(std::move(set));
    }
  }
  Instance inst(std::move(elems), std::move(sets), Problem{ProblemKind::Minimum, 0}, k);
  r.validate(inst);
  return {std::move(inst), std::move(r)};
}

std::string overlap_name(Overlap o) {
  switch (o) {
    case Overlap::Single: return "single";
    case Overlap::Disjoint: return "disjoint";
    case Overlap::Overlapping: return "overlapping";
  }
  return "?";
}

Overlap parse_overlap(const std::string& s) {
  if (s == "single") return Overlap::Single;
  if (s == "disjoint") return Overlap::Disjoint;
  if (s == "overlapping") return Overlap::Overlapping;
  throw InvalidInstance("unknown overlap mode '" + s + "'");
}

Rng::Rng(std::uint64_t seed) : state_(seed) {}

std::uint64_t Rng::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi <= lo) return lo;
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

namespace {

/// A random element and an admissible value, on an integer grid with quarter-point values.
std::pair<UncertainInterval, Rational> random_element(Rng& rng, long grid, bool mixed_kinds) {
  if (rng.chance(1, 6)) {
    Rational v(rng.uniform(0, 2 * grid), 2);
    return {UncertainInterval::point(v), v};
  }
  long lo = rng.uniform(0, grid - 1);
  long len = rng.uniform(1, std::max<long>(1, std::min<long>(grid - lo, grid / 2 + 1)));
  long hi = lo + len;
  EndpointKind lk = EndpointKind::Open;
  EndpointKind hk = EndpointKind::Open;
  if (mixed_kinds) {
    lk = rng.chance(1, 2) ? EndpointKind::Closed : EndpointKind::Open;
    hk = rng.chance(1, 2) ? EndpointKind::Closed : EndpointKind::Open;
  }
  UncertainInterval iv(Rational(lo), lk, Rational(hi), hk);
  // Quarter points; endpoints only when closed.
  std::vector<Rational> choices;
  for (long q = 0; q <= 4 * len; ++q) {
    Rational v = Rational(lo) + Rational(q, 4);
    if (iv.contains(v)) choices.push_back(v);
  }
  // Bias toward integer points so ties and endpoint hits happen often.
  if (rng.chance(1, 3)) {
    std::vector<Rational> ints;
    for (const auto& v : choices)
      if (v.is_integer()) ints.push_back(v);
    if (!ints.empty()) choices = std::move(ints);
  }
  Rational v = choices[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(choices.size()) - 1))];
  return {iv, v};
}

}  // namespace

Generated gen_random(std::uint64_t seed, const RandomParams& p) {
  if (p.n < 1) throw InvalidInstance("random instance needs n >= 1");
  if (p.k < 1) throw InvalidInstance("random instance needs k >= 1");
  const bool selection = p.problem == ProblemKind::SelectionValue || p.problem == ProblemKind::SelectionFull;
  Overlap overlap = p.overlap;
  std::size_t m = p.m;
  if (selection) {
    if (overlap != Overlap::Single || m > 1) throw InvalidInstance("selection instances use a single set");
    overlap = Overlap::Single;
    m = 1;
  }
  if (overlap == Overlap::Single && m > 1) throw InvalidInstance("single overlap mode needs m = 1");
  if (m < 1) throw InvalidInstance("random instance needs m >= 1");
  if (overlap == Overlap::Disjoint && m > p.n) throw InvalidInstance("disjoint sets need m <= n");
  if (selection && p.rank > p.n) throw InvalidInstance("rank exceeds n");

  Rng rng(seed * 0x100000001b3ULL + 0x51ed2701ULL);
  const bool mixed = p.problem == ProblemKind::Sorting || p.problem == ProblemKind::SelectionFull;
  const long grid = std::max<long>(4, static_cast<long>(p.n));
  std::vector<UncertainInterval> elems;
  Realization r;
  for (std::size_t i = 0; i < p.n; ++i) {
    auto [iv, v] = random_element(rng, grid, mixed);
    elems.push_back(iv);
    r.values.push_back(v);
  }

  std::vector<ElementSet> sets;
  if (overlap == Overlap::Single) {
    ElementSet s{"S1", {}};
    for (ElementId i = 0; i < p.n; ++i) s.members.push_back(i);
    sets.push_back(std::move(s));
  } else if (overlap == Overlap::Disjoint) {
    std::vector<ElementId> perm(p.n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = p.n; i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(i) - 1))]);
    std::vector<std::vector<ElementId>> groups(m);
    for (std::size_t i = 0; i < p.n; ++i)
      groups[i < m ? i : static_cast<std::size_t>(rng.uniform(0, static_cast<long>(m) - 1))].push_back(perm[i]);
    for (std::size_t s = 0; s < m; ++s) {
      std::sort(groups[s].begin(), groups[s].end());
      sets.push_back({"S" + std::to_string(s + 1), groups[s]});
    }
  } else {
    for (std::size_t s = 0; s < m; ++s) {
      const long hi = std::max<long>(1, static_cast<long>(p.n) / 2 + 1);
      std::size_t size = static_cast<std::size_t>(rng.uniform(std::min<long>(2, static_cast<long>(p.n)), std::max<long>(hi, 1)));
      size = std::min(size, p.n);
      std::vector<ElementId> all(p.n);
      std::iota(all.begin(), all.end(), 0);
      for (std::size_t i = 0; i < size; ++i)
        std::swap(all[i], all[static_cast<std::size_t>(rng.uniform(static_cast<long>(i), static_cast<long>(p.n) - 1))]);
      std::vector<ElementId> members(all.begin(), all.begin() + static_cast<long>(size));
      std::sort(members.begin(), members.end());
      sets.push_back({"S" + std::to_string(s + 1), members});
    }
  }

  Problem prob{p.problem, 0};
  if (selection) {
    std::size_t half = (p.n + 1) / 2;
    prob.rank = p.rank ? p.rank : static_cast<std::size_t>(rng.uniform(1, static_cast<long>(half)));
  }
  Instance inst(std::move(elems), std::move(sets), prob, p.k);
  r.validate(inst);
  return {std::move(inst), std::move(r)};
}

}  // namespace qround
