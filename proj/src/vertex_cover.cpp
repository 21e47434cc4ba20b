#include "qround/vertex_cover.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "qround/errors.hpp"

namespace qround {

namespace {

DependencyGraph build(const Instance& inst, const std::vector<std::size_t>& sets, const KnowledgeState& K) {
  DependencyGraph g;
  std::set<ElementId> verts;
  std::set<std::pair<ElementId, ElementId>> edges;
  for (std::size_t s : sets) {
    const auto& mem = inst.set(s).members;
    verts.insert(mem.begin(), mem.end());
    for (std::size_t a = 0; a < mem.size(); ++a)
      for (std::size_t b = a + 1; b < mem.size(); ++b)
        if (dependent(K.effective(mem[a]), K.effective(mem[b])))
          edges.emplace(std::min(mem[a], mem[b]), std::max(mem[a], mem[b]));
  }
  g.vertices.assign(verts.begin(), verts.end());
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

std::vector<ElementId> interval_cover(const DependencyGraph& g, const KnowledgeState& K) {
  // Complement of a maximum independent set, found greedily by earliest right endpoint.
  std::vector<ElementId> order = g.vertices;
  for (ElementId v : order)
    if (K.effective(v).is_trivial()) throw InternalError("interval-exact cover needs non-trivial vertices");
  std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    const auto& x = K.effective(a);
    const auto& y = K.effective(b);
    if (x.hi() != y.hi()) return x.hi() < y.hi();
    if (x.lo() != y.lo()) return x.lo() < y.lo();
    return a < b;
  });
  std::vector<ElementId> cover;
  std::optional<Rational> last;
  for (ElementId v : order) {
    if (!last || K.effective(v).lo() >= *last)
      last = K.effective(v).hi();
    else
      cover.push_back(v);
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

std::vector<ElementId> matching_cover(const DependencyGraph& g) {
  std::set<ElementId> matched;
  for (const auto& [a, b] : g.edges)
    if (!matched.count(a) && !matched.count(b)) {
      matched.insert(a);
      matched.insert(b);
    }
  return {matched.begin(), matched.end()};
}

/// Exact minimum vertex cover of one connected component with at most 64 vertices.
class BranchAndBound {
 public:
  explicit BranchAndBound(std::vector<std::uint64_t> adj) : adj_(std::move(adj)), n_(adj_.size()) {}

  std::uint64_t solve() {
    best_ = n_ == 64 ? ~0ULL : ((1ULL << n_) - 1);
    best_size_ = n_;
    std::uint64_t alive = best_;
    recurse(alive, 0, 0);
    return best_;
  }

 private:
  std::size_t degree(std::size_t v, std::uint64_t alive) const { return static_cast<std::size_t>(__builtin_popcountll(adj_[v] & alive)); }

  /// Size of a greedy maximal matching among live vertices: a lower bound on any cover.
  std::size_t matching_bound(std::uint64_t alive) const {
    std::size_t m = 0;
    std::uint64_t free = alive;
    while (free) {
      std::size_t v = static_cast<std::size_t>(__builtin_ctzll(free));
      free &= ~(1ULL << v);
      std::uint64_t nb = adj_[v] & free;
      if (nb) {
        std::size_t u = static_cast<std::size_t>(__builtin_ctzll(nb));
        free &= ~(1ULL << u);
        ++m;
      }
    }
    return m;
  }

  void recurse(std::uint64_t alive, std::uint64_t chosen, std::size_t size) {
    // Drop isolated vertices.
    std::uint64_t scan = alive;
    while (scan) {
      std::size_t v = static_cast<std::size_t>(__builtin_ctzll(scan));
      scan &= scan - 1;
      if (degree(v, alive) == 0) alive &= ~(1ULL << v);
    }
    if (!alive) {
      if (size < best_size_) {
        best_size_ = size;
        best_ = chosen;
      }
      return;
    }
    if (size + matching_bound(alive) >= best_size_) return;
    std::size_t pick = 64;
    std::size_t pick_deg = 0;
    scan = alive;
    while (scan) {
      std::size_t v = static_cast<std::size_t>(__builtin_ctzll(scan));
      scan &= scan - 1;
      std::size_t d = degree(v, alive);
      if (d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    std::uint64_t bit = 1ULL << pick;
    // Only isolated edges remain; one endpoint each is optimal.
    if (pick_deg == 1) {
      recurse(alive & ~bit, chosen | bit, size + 1);
      return;
    }
    recurse(alive & ~bit, chosen | bit, size + 1);
    std::uint64_t nb = adj_[pick] & alive;
    recurse(alive & ~bit & ~nb, chosen | nb, size + static_cast<std::size_t>(__builtin_popcountll(nb)));
  }

  std::vector<std::uint64_t> adj_;
  std::size_t n_;
  std::uint64_t best_ = 0;
  std::size_t best_size_ = 0;
};

std::vector<ElementId> general_cover(const DependencyGraph& g, std::size_t cap) {
  std::map<ElementId, std::size_t> index;
  for (ElementId v : g.vertices) index.emplace(v, index.size());
  const std::size_t n = g.vertices.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& [a, b] : g.edges) parent[find(index.at(a))] = find(index.at(b));
  std::map<std::size_t, std::vector<std::size_t>> comps;
  for (std::size_t i = 0; i < n; ++i) comps[find(i)].push_back(i);
  std::vector<ElementId> cover;
  for (const auto& [root, comp] : comps) {
    if (comp.size() < 2) continue;
    if (comp.size() > std::min<std::size_t>(cap, 64))
      throw CapExceeded("dependency component with " + std::to_string(comp.size()) + " vertices exceeds cap " +
                        std::to_string(cap));
    std::map<std::size_t, std::size_t> local;
    for (std::size_t i : comp) local.emplace(i, local.size());
    std::vector<std::uint64_t> adj(comp.size(), 0);
    for (const auto& [a, b] : g.edges) {
      auto ia = local.find(index.at(a));
      if (ia == local.end()) continue;
      std::size_t x = ia->second;
      std::size_t y = local.at(index.at(b));
      adj[x] |= 1ULL << y;
      adj[y] |= 1ULL << x;
    }
    std::uint64_t mask = BranchAndBound(std::move(adj)).solve();
    for (std::size_t j = 0; j < comp.size(); ++j)
      if (mask >> j & 1ULL) cover.push_back(g.vertices[comp[j]]);
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

}  // namespace

DependencyGraph dependency_graph(const Instance& inst, const KnowledgeState& K) {
  std::vector<std::size_t> all(inst.m());
  std::iota(all.begin(), all.end(), 0);
  return build(inst, all, K);
}

DependencyGraph dependency_graph(const Instance& inst, std::size_t set, const KnowledgeState& K) {
  return build(inst, {set}, K);
}

std::vector<ElementId> min_vertex_cover(const DependencyGraph& g, CoverMode mode, const KnowledgeState& K,
                                        std::size_t cap) {
  switch (mode) {
    case CoverMode::IntervalExact: return interval_cover(g, K);
    case CoverMode::GeneralExact: return general_cover(g, cap);
    case CoverMode::Matching: return matching_cover(g);
  }
  return {};
}

bool is_vertex_cover(const DependencyGraph& g, const std::vector<ElementId>& cover) {
  std::set<ElementId> c(cover.begin(), cover.end());
  return std::all_of(g.edges.begin(), g.edges.end(), [&](const auto& e) { return c.count(e.first) || c.count(e.second); });
}

}  // namespace qround
