#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pivd/graph.hpp"

namespace pivd {

/// Vertex ordering with the umbrella property: for positions i < j < k,
/// an edge order[i]order[k] forces edges order[i]order[j] and
/// order[j]order[k]. A graph admits one iff it is a proper interval graph.
struct ProperOrdering {
  std::vector<VertexId> order;
  std::unordered_map<VertexId, int> position;
};

/// Ordered maximal cliques of a connected proper interval graph. Each
/// vertex occurs in a contiguous run of cliques, recorded in span as
/// (first index, last index).
struct CliquePath {
  std::vector<VertexSet> cliques;
  std::unordered_map<VertexId, std::pair<int, int>> span;
};

namespace detail {

// One LBFS sweep over a local-index adjacency structure. `priority` lists
// all vertices; earlier entries win every tie, so priority[0] is the start
// vertex. Implemented by partition refinement on an ordered bucket list.
inline std::vector<int> lbfs_sweep(const std::vector<std::vector<int>>& adj,
                                   const std::vector<int>& priority) {
  const std::size_t n = adj.size();
  std::vector<std::vector<int>> buckets;
  if (n > 0) buckets.push_back(priority);
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> is_nb(n, 0);
  while (!buckets.empty()) {
    int v = buckets.front().front();
    order.push_back(v);
    for (int u : adj[static_cast<std::size_t>(v)]) is_nb[static_cast<std::size_t>(u)] = 1;
    std::vector<std::vector<int>> next;
    next.reserve(buckets.size() * 2);
    for (auto& b : buckets) {
      std::vector<int> in, rest;
      for (int u : b) {
        if (u == v) continue;
        (is_nb[static_cast<std::size_t>(u)] ? in : rest).push_back(u);
      }
      if (!in.empty()) next.push_back(std::move(in));
      if (!rest.empty()) next.push_back(std::move(rest));
    }
    for (int u : adj[static_cast<std::size_t>(v)]) is_nb[static_cast<std::size_t>(u)] = 0;
    buckets = std::move(next);
  }
  return order;
}

// Candidate proper interval ordering of a connected graph: three LBFS
// sweeps, each later sweep breaking ties towards vertices placed latest by
// the previous one. For unit interval graphs the third sweep is a proper
// interval ordering; the caller verifies, so a miss on other graphs is fine.
inline std::vector<int> lbfs_candidate(const std::vector<std::vector<int>>& adj) {
  const std::size_t n = adj.size();
  std::vector<int> prio(n);
  for (std::size_t i = 0; i < n; ++i) prio[i] = static_cast<int>(i);
  std::vector<int> sweep = lbfs_sweep(adj, prio);
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<int> rev(sweep.rbegin(), sweep.rend());
    sweep = lbfs_sweep(adj, rev);
  }
  return sweep;
}

struct OrderingWindows {
  std::vector<int> lo, hi;  // extent of N[v] around each position
  bool contiguous = false;
};

// The umbrella property holds iff every closed neighbourhood occupies a
// contiguous window of positions.
inline OrderingWindows neighborhood_windows(const Graph& g, const ProperOrdering& ord) {
  const int n = static_cast<int>(ord.order.size());
  OrderingWindows w;
  w.lo.resize(static_cast<std::size_t>(n));
  w.hi.resize(static_cast<std::size_t>(n));
  w.contiguous = true;
  for (int i = 0; i < n; ++i) {
    VertexId v = ord.order[static_cast<std::size_t>(i)];
    int lo = i, hi = i;
    for (VertexId u : g.neighbors(v)) {
      int p = ord.position.at(u);
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
    w.lo[static_cast<std::size_t>(i)] = lo;
    w.hi[static_cast<std::size_t>(i)] = hi;
    if (hi - lo != static_cast<int>(g.degree(v))) w.contiguous = false;
  }
  return w;
}

// Maximal position intervals [i, j] that induce cliques, in order. For a
// verified proper ordering these are exactly the maximal cliques.
inline std::vector<std::pair<int, int>> interval_cliques(const OrderingWindows& w) {
  const int n = static_cast<int>(w.hi.size());
  std::vector<std::pair<int, int>> out;
  int prev_end = -1;
  for (int i = 0; i < n; ++i) {
    int j = i;
    int reach = w.hi[static_cast<std::size_t>(i)];
    while (j + 1 <= reach) {
      ++j;
      reach = std::min(reach, w.hi[static_cast<std::size_t>(j)]);
    }
    if (i == 0 || j > prev_end) {
      out.emplace_back(i, j);
      prev_end = j;
    }
  }
  return out;
}

}  // namespace detail

/// Proper interval ordering of g, or nullopt when g is not a proper
/// interval graph. Components are ordered consecutively, ascending by
/// smallest member; the ordering is deterministic.
inline std::optional<ProperOrdering> proper_interval_ordering(const Graph& g) {
  ProperOrdering ord;
  ord.order.reserve(g.vertex_count());
  for (const VertexSet& comp : connected_components(g)) {
    std::vector<std::vector<int>> adj(comp.size());
    std::unordered_map<VertexId, int> idx;
    idx.reserve(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) idx[comp[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (VertexId u : g.neighbors(comp[i])) adj[i].push_back(idx.at(u));
    for (int local : detail::lbfs_candidate(adj)) ord.order.push_back(comp[static_cast<std::size_t>(local)]);
  }
  ord.position.reserve(ord.order.size());
  for (std::size_t i = 0; i < ord.order.size(); ++i) ord.position[ord.order[i]] = static_cast<int>(i);
  if (!detail::neighborhood_windows(g, ord).contiguous) return std::nullopt;
  return ord;
}

inline bool is_proper_interval(const Graph& g) { return proper_interval_ordering(g).has_value(); }

/// Clique path of a connected proper interval graph. Rejects disconnected
/// or non-proper-interval input.
inline CliquePath clique_path(const Graph& g) {
  if (connected_components(g).size() != 1)
    throw std::invalid_argument("clique_path: graph must be connected and nonempty");
  auto ord = proper_interval_ordering(g);
  if (!ord) throw std::invalid_argument("clique_path: not a proper interval graph");
  auto windows = detail::neighborhood_windows(g, *ord);
  CliquePath cp;
  int t = 0;
  for (auto [i, j] : detail::interval_cliques(windows)) {
    VertexSet clique;
    clique.reserve(static_cast<std::size_t>(j - i + 1));
    for (int p = i; p <= j; ++p) {
      VertexId v = ord->order[static_cast<std::size_t>(p)];
      clique.push_back(v);
      auto it = cp.span.find(v);
      if (it == cp.span.end())
        cp.span.emplace(v, std::make_pair(t, t));
      else
        it->second.second = t;
    }
    cp.cliques.push_back(make_set(std::move(clique)));
    ++t;
  }
  return cp;
}

/// Maximum clique of a proper interval graph: the leftmost maximum clique
/// interval of the deterministic ordering. Empty graph yields the empty set.
inline VertexSet maximum_clique(const Graph& g) {
  auto ord = proper_interval_ordering(g);
  if (!ord) throw std::invalid_argument("maximum_clique: not a proper interval graph");
  auto windows = detail::neighborhood_windows(g, *ord);
  std::pair<int, int> best{0, -1};
  for (auto [i, j] : detail::interval_cliques(windows))
    if (j - i > best.second - best.first) best = {i, j};
  VertexSet out;
  for (int p = best.first; p <= best.second; ++p) out.push_back(ord->order[static_cast<std::size_t>(p)]);
  return make_set(std::move(out));
}

}  // namespace pivd
