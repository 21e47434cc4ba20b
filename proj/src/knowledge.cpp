#include "qround/knowledge.hpp"

#include <algorithm>
#include <string>

#include "qround/errors.hpp"

namespace qround {

KnowledgeState::KnowledgeState(std::vector<UncertainInterval> intervals)
    : original_(std::move(intervals)), effective_(original_), queried_(original_.size(), false) {}

std::optional<Rational> KnowledgeState::value(ElementId id) const {
  if (!is_known(id)) return std::nullopt;
  return effective_.at(id).lo();
}

void KnowledgeState::reveal(ElementId id, const Rational& v) {
  if (id >= original_.size()) throw OracleError("query of unknown element " + std::to_string(id + 1));
  if (queried_[id]) throw OracleError("element " + std::to_string(id + 1) + " queried twice");
  if (original_[id].is_trivial()) throw OracleError("trivial element " + std::to_string(id + 1) + " queried");
  if (!original_[id].contains(v))
    throw OracleError("value " + v.str() + " outside interval " + original_[id].str() + " of element " +
                      std::to_string(id + 1));
  queried_[id] = true;
  effective_[id] = UncertainInterval(v);
}

std::size_t KnowledgeState::queried_count() const {
  return static_cast<std::size_t>(std::count(queried_.begin(), queried_.end(), true));
}

}  // namespace qround
