#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qround/interval.hpp"

namespace qround {

/// Element ids are 0-based in memory and 1-based in every text format.
using ElementId = std::size_t;

/// What an algorithm knows: each element is either its original interval or a revealed value.
class KnowledgeState {
 public:
  KnowledgeState() = default;
  explicit KnowledgeState(std::vector<UncertainInterval> intervals);

  std::size_t size() const { return original_.size(); }
  const UncertainInterval& original(ElementId id) const { return original_.at(id); }
  /// The original interval, or {v} once the value is known.
  const UncertainInterval& effective(ElementId id) const { return effective_.at(id); }

  /// Known either because the interval is trivial or because it was queried.
  bool is_known(ElementId id) const { return effective_.at(id).is_trivial(); }
  bool is_queried(ElementId id) const { return queried_.at(id); }
  /// Non-trivial and not yet queried.
  bool is_open_for_query(ElementId id) const { return !is_known(id); }
  std::optional<Rational> value(ElementId id) const;

  /// Records the answer to a query. Throws on a repeated query, a trivial
  /// element, or a value outside the original interval.
  void reveal(ElementId id, const Rational& v);

  std::size_t queried_count() const;

 private:
  std::vector<UncertainInterval> original_;
  std::vector<UncertainInterval> effective_;
  std::vector<bool> queried_;
};

}  // namespace qround
