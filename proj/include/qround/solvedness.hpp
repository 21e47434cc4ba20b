#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qround/instance.hpp"

namespace qround {

/// No dependent pair remains inside the set.
bool sorting_set_solved(const Instance& inst, std::size_t set, const KnowledgeState& K);

/// Some known value is at most every left endpoint of the still-unknown elements.
bool minimum_set_solved(const Instance& inst, std::size_t set, const KnowledgeState& K);
/// Unknown elements that certainly are not the minimum of the set: left endpoint at least
/// a known value, or at least the right endpoint of another element.
std::vector<ElementId> minimum_discard(const Instance& inst, std::size_t set, const KnowledgeState& K);
/// Unknown, non-discarded elements of the set in left-endpoint order (ties by id).
std::vector<ElementId> minimum_candidates(const Instance& inst, std::size_t set, const KnowledgeState& K);

/// The i-th smallest effective left and right endpoint values. v* lies between them.
struct SelectionBounds {
  Rational lower;
  Rational upper;
  bool pinned() const { return lower == upper; }
};
SelectionBounds selection_bounds(const KnowledgeState& K, std::size_t rank);
bool selection_solved(const KnowledgeState& K, std::size_t rank, ProblemKind variant);

bool set_solved(const Instance& inst, std::size_t set, const KnowledgeState& K);
bool instance_solved(const Instance& inst, const KnowledgeState& K);

/// Answer that is provable from the knowledge state alone.
struct SolutionCertificate {
  ProblemKind kind = ProblemKind::Minimum;
  std::vector<std::vector<ElementId>> orders;                 // Sorting, per set
  std::vector<std::pair<ElementId, Rational>> minima;         // Minimum, per set
  std::optional<Rational> vstar;                              // Selection
  std::vector<ElementId> equal_ids;                           // SelectionFull

  std::string str() const;
};

/// Throws InternalError if the state is not solved.
SolutionCertificate extract_certificate(const Instance& inst, const KnowledgeState& K);
/// Checks the certificate against precise values; returns an empty string on success.
std::string verify_certificate(const Instance& inst, const SolutionCertificate& cert, const Realization& r);

/// Knowledge after querying exactly the given elements of a realization.
KnowledgeState knowledge_after(const Instance& inst, const Realization& r, const std::vector<ElementId>& queried);

}  // namespace qround
