#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qround/interval.hpp"
#include "qround/knowledge.hpp"

namespace qround {

enum class ProblemKind { Sorting, Minimum, SelectionValue, SelectionFull };

struct Problem {
  ProblemKind kind = ProblemKind::Minimum;
  /// The i of Selection (1-based); 0 for Sorting and Minimum.
  std::size_t rank = 0;

  bool is_selection() const { return kind == ProblemKind::SelectionValue || kind == ProblemKind::SelectionFull; }
  friend bool operator==(const Problem&, const Problem&) = default;
};

std::string problem_name(ProblemKind kind);
ProblemKind parse_problem_kind(std::string_view name);

struct ElementSet {
  std::string name;
  std::vector<ElementId> members;
  friend bool operator==(const ElementSet&, const ElementSet&) = default;
};

/// Ground set of uncertain elements, a family of subsets, the problem, and the round width k.
class Instance {
 public:
  Instance() = default;
  /// Validates on construction. Selection with an empty family gets the single full set.
  Instance(std::vector<UncertainInterval> elements, std::vector<ElementSet> sets, Problem problem, std::size_t k);

  std::size_t n() const { return elements_.size(); }
  std::size_t m() const { return sets_.size(); }
  std::size_t k() const { return k_; }
  const Problem& problem() const { return problem_; }
  ProblemKind kind() const { return problem_.kind; }
  std::size_t rank() const { return problem_.rank; }

  const std::vector<UncertainInterval>& elements() const { return elements_; }
  const UncertainInterval& element(ElementId id) const { return elements_.at(id); }
  const std::vector<ElementSet>& sets() const { return sets_; }
  const ElementSet& set(std::size_t s) const { return sets_.at(s); }
  /// Indices of the sets containing the element, ascending.
  const std::vector<std::size_t>& sets_of(ElementId id) const { return sets_of_.at(id); }
  bool share_set(ElementId a, ElementId b) const;
  bool disjoint_family() const;

  /// Same instance with a different round width.
  Instance with_k(std::size_t k) const;
  KnowledgeState initial_knowledge() const { return KnowledgeState(elements_); }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.elements_ == b.elements_ && a.sets_ == b.sets_ && a.problem_ == b.problem_ && a.k_ == b.k_;
  }

 private:
  std::vector<UncertainInterval> elements_;
  std::vector<ElementSet> sets_;
  Problem problem_;
  std::size_t k_ = 1;
  std::vector<std::vector<std::size_t>> sets_of_;
};

/// Precise values of all elements (trivial elements carry their point).
struct Realization {
  std::vector<Rational> values;

  const Rational& operator[](ElementId id) const { return values.at(id); }
  /// Throws InvalidRealization unless every value lies in its interval.
  void validate(const Instance& inst) const;
  friend bool operator==(const Realization&, const Realization&) = default;
};

struct InstanceFile {
  Instance instance;
  std::optional<Realization> realization;
};

/// Parses the line format; throws ParseError with line and column, or
/// InvalidInstance / InvalidRealization on semantic violations.
InstanceFile parse_instance(std::string_view text);
InstanceFile parse_instance(std::istream& in);
InstanceFile load_instance(const std::string& path);

/// Canonical text: k, problem, intervals, sets, then values of non-trivial elements.
std::string serialize_instance(const Instance& inst, const Realization* r = nullptr);

}  // namespace qround
