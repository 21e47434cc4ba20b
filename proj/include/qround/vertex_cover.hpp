#pragma once

#include <utility>
#include <vector>

#include "qround/instance.hpp"

namespace qround {

/// Vertices are element ids; edges join dependent elements that share a set.
struct DependencyGraph {
  std::vector<ElementId> vertices;
  std::vector<std::pair<ElementId, ElementId>> edges;  // first < second, sorted
};

/// Graph over all elements that belong to some set, on the current knowledge.
DependencyGraph dependency_graph(const Instance& inst, const KnowledgeState& K);
/// Single-set graph: vertices are the set's members.
DependencyGraph dependency_graph(const Instance& inst, std::size_t set, const KnowledgeState& K);

enum class CoverMode { IntervalExact, GeneralExact, Matching };

constexpr std::size_t kGeneralExactCap = 40;

/// Vertex cover of g. IntervalExact needs non-trivial vertices from one interval graph
/// (it takes the effective intervals from K); GeneralExact is branch and bound, capped
/// per connected component; Matching returns the endpoints of a greedy maximal matching.
std::vector<ElementId> min_vertex_cover(const DependencyGraph& g, CoverMode mode, const KnowledgeState& K,
                                        std::size_t cap = kGeneralExactCap);

bool is_vertex_cover(const DependencyGraph& g, const std::vector<ElementId>& cover);

}  // namespace qround
