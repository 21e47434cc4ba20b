#pragma once

#include <cstdint>
#include <string>

#include "qround/instance.hpp"

namespace qround {

struct Generated {
  Instance instance;
  Realization realization;
};

/// Three disjoint sets of 6, 6 and 5 open intervals with k = 5; optimal prefixes 3, 3, 5.
Generated gen_fig2_bal_instance();

/// Nested-sharing Minimum instance: c groups of k-1 sets; sets in group g share the
/// g leftmost elements x_1..x_g and have one unique element each. opt_1 = c.
Generated gen_fig3_overlap_instance(std::size_t k = 3, std::size_t c = 3);

enum class Overlap { Single, Disjoint, Overlapping };
std::string overlap_name(Overlap o);
Overlap parse_overlap(const std::string& s);

struct RandomParams {
  std::size_t n = 10;
  std::size_t m = 1;
  std::size_t k = 2;
  Overlap overlap = Overlap::Single;
  ProblemKind problem = ProblemKind::Minimum;
  /// Selection rank; 0 draws one uniformly from 1..ceil(n/2).
  std::size_t rank = 0;
};

/// Deterministic in (seed, params). Minimum and SelectionValue get open or trivial
/// intervals; Sorting and SelectionFull get mixed endpoint kinds.
Generated gen_random(std::uint64_t seed, const RandomParams& params);

/// Small deterministic generator with a portable bounded sampler.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool chance(std::uint64_t num, std::uint64_t den) { return static_cast<std::uint64_t>(uniform(0, den - 1)) < num; }

 private:
  std::uint64_t state_;
};

}  // namespace qround
