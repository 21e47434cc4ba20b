#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qround/oracles.hpp"

namespace qround {

/// "name" or "name:key=value,key=value".
struct SourceSpec {
  std::string name;
  std::map<std::string, std::string> params;

  static SourceSpec parse(const std::string& text);
  std::string str() const;
  std::size_t get_size(const std::string& key, std::size_t fallback) const;
  std::string get(const std::string& key, const std::string& fallback) const;
};

struct Trial {
  Instance instance;
  std::unique_ptr<ValueOracle> oracle;
  /// Present for fixed-realization sources.
  std::optional<Realization> realization;
};

/// Builds an instance and its oracle. Sources: fig2, fig3 (k, c), random (n, m, k, overlap,
/// problem, i), fig1-pairs (c, k), wlb (M), additive (m), sel-full-lb (i), sel-value-lb (i, k).
/// `size` overrides n of random sources.
Trial make_trial(const std::string& spec, std::uint64_t seed = 1, std::optional<std::size_t> size = std::nullopt);

std::vector<std::string> source_names();

}  // namespace qround
