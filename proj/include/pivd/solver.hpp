#pragma once

#include <cstdint>
#include <optional>

#include "pivd/errors.hpp"
#include "pivd/graph.hpp"
#include "pivd/obstructions.hpp"
#include "pivd/proper_interval.hpp"

namespace pivd {

struct Solution {
  bool feasible = false;
  VertexSet deletion_set;
  std::uint64_t nodes_explored = 0;
};

namespace detail {

// Greedy vertex-disjoint small obstructions; every deletion set needs one
// vertex per packed obstruction. Stops once the count exceeds the budget.
inline int obstruction_packing(const Graph& g, const Obstruction& first, int budget) {
  int count = 1;
  Graph h = delete_vertices(g, first.vertices);
  while (count <= budget) {
    auto obs = find_small_obstruction(h);
    if (!obs) break;
    ++count;
    h = delete_vertices(h, obs->vertices);
  }
  return count;
}

inline bool solve_at_depth(const Graph& g, int budget, VertexSet& chosen, std::uint64_t& nodes) {
  ++nodes;
  std::optional<Obstruction> obs = find_small_obstruction(g);
  if (!obs) {
    if (is_proper_interval(g)) return true;
    obs = find_any_hole(g, 4);  // no small obstructions left, so length >= 9
    if (!obs) throw std::logic_error("solve: graph neither proper interval nor holed");
  }
  if (budget == 0) return false;
  if (obstruction_packing(g, *obs, budget) > budget) return false;
  for (VertexId v : obs->vertices) {
    chosen.push_back(v);
    if (solve_at_depth(delete_vertices(g, {v}), budget - 1, chosen, nodes)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// Exact decision by branching on obstruction vertices (ascending id),
/// with iterative deepening so the returned set has minimum size.
inline Solution solve(const Graph& g, int budget) {
  if (budget < 0) throw std::invalid_argument("solve: budget must be nonnegative");
  Solution sol;
  for (int b = 0; b <= budget; ++b) {
    VertexSet chosen;
    if (detail::solve_at_depth(g, b, chosen, sol.nodes_explored)) {
      sol.feasible = true;
      sol.deletion_set = make_set(std::move(chosen));
      return sol;
    }
  }
  return sol;
}

/// Smallest b <= cap such that solve(g, b) is feasible; nullopt past cap.
inline std::optional<int> minimum_deletion(const Graph& g, int cap) {
  if (cap < 0) throw std::invalid_argument("minimum_deletion: cap must be nonnegative");
  Solution sol = solve(g, cap);
  if (!sol.feasible) return std::nullopt;
  return static_cast<int>(sol.deletion_set.size());
}

/// Exhaustive check of every deletion set of size <= budget in ascending
/// size and lexicographic order. Independent oracle for solve.
inline Solution brute_force_solve(const Graph& g, int budget) {
  if (budget < 0) throw std::invalid_argument("brute_force_solve: budget must be nonnegative");
  if (g.vertex_count() > 18)
    throw ResourceLimitError("brute_force_solve: graph larger than 18 vertices");
  Solution sol;
  const VertexSet& verts = g.vertices();
  const int n = static_cast<int>(verts.size());
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from, int remaining) -> bool {
    if (remaining == 0) {
      ++sol.nodes_explored;
      VertexSet del;
      del.reserve(pick.size());
      for (int i : pick) del.push_back(verts[static_cast<std::size_t>(i)]);
      return is_proper_interval(delete_vertices(g, del));
    }
    for (int i = from; i <= n - remaining; ++i) {
      pick.push_back(i);
      if (self(self, i + 1, remaining - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int size = 0; size <= std::min(budget, n); ++size) {
    pick.clear();
    if (rec(rec, 0, size)) {
      sol.feasible = true;
      for (int i : pick) sol.deletion_set.push_back(verts[static_cast<std::size_t>(i)]);
      return sol;
    }
  }
  return sol;
}

}  // namespace pivd
