#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pivd {

/// Vertex identifier. Stable across deletions within one graph lifetime:
/// ids of deleted vertices are never handed out again for new vertices.
using VertexId = int;

/// Sorted, duplicate-free vector of vertex ids. Every helper below both
/// requires and preserves this form.
using VertexSet = std::vector<VertexId>;

inline VertexSet make_set(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool set_contains(const VertexSet& s, VertexId v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool sets_disjoint(const VertexSet& a, const VertexSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib)
      ++ia;
    else if (*ib < *ia)
      ++ib;
    else
      return false;
  }
  return true;
}

/// Simple undirected graph. Immutable value: all operations below return
/// new graphs. Adjacency lists are kept sorted so that every iteration in
/// the library is deterministic (ascending id order throughout).
class Graph {
 public:
  Graph() = default;

  /// Graph with vertices 0..n-1 and no edges.
  static Graph with_vertex_count(int n) {
    VertexSet vs(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) vs[static_cast<std::size_t>(i)] = i;
    return from_parts(std::move(vs), {});
  }

  /// Graph with vertices 0..n-1 and the given edges.
  static Graph from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    VertexSet vs(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) vs[static_cast<std::size_t>(i)] = i;
    return from_parts(std::move(vs), edges);
  }

  /// Graph over an explicit vertex set. Rejects self-loops and edges with
  /// unknown endpoints. Duplicate edges collapse.
  static Graph from_parts(VertexSet vertices, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    Graph g;
    g.verts_ = make_set(std::move(vertices));
    for (VertexId v : g.verts_) {
      if (v < 0) throw std::invalid_argument("graph: negative vertex id " + std::to_string(v));
      g.adj_.emplace(v, VertexSet{});
    }
    for (auto [u, v] : edges) {
      if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
      auto iu = g.adj_.find(u);
      auto iv = g.adj_.find(v);
      if (iu == g.adj_.end() || iv == g.adj_.end())
        throw std::invalid_argument("graph: edge endpoint not a vertex: " + std::to_string(u) + " " +
                                    std::to_string(v));
      iu->second.push_back(v);
      iv->second.push_back(u);
    }
    std::size_t total = 0;
    for (VertexId v : g.verts_) {
      auto& nb = g.adj_[v];
      nb = make_set(std::move(nb));
      total += nb.size();
    }
    g.edge_count_ = total / 2;
    g.id_high_water_ = g.verts_.empty() ? -1 : g.verts_.back();
    return g;
  }

  const VertexSet& vertices() const { return verts_; }
  std::size_t vertex_count() const { return verts_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool has_vertex(VertexId v) const { return adj_.find(v) != adj_.end(); }

  bool has_edge(VertexId u, VertexId v) const {
    auto it = adj_.find(u);
    if (it == adj_.end()) return false;
    return set_contains(it->second, v);
  }

  const VertexSet& neighbors(VertexId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("graph: unknown vertex " + std::to_string(v));
    return it->second;
  }

  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  /// Largest id ever present in this graph's history. Deletions do not
  /// lower it; splices allocate fresh ids above it.
  VertexId id_high_water() const { return id_high_water_; }

  std::vector<std::pair<VertexId, VertexId>> edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (VertexId u : verts_)
      for (VertexId v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph& other) const {
    if (verts_ != other.verts_) return false;
    for (VertexId v : verts_)
      if (neighbors(v) != other.neighbors(v)) return false;
    return true;
  }

 private:
  VertexSet verts_;
  std::unordered_map<VertexId, VertexSet> adj_;
  std::size_t edge_count_ = 0;
  VertexId id_high_water_ = -1;

  friend Graph induced_subgraph(const Graph&, const VertexSet&);
  friend Graph splice_component(const Graph&, const VertexSet&, const VertexSet&, int, const VertexSet&,
                                const VertexSet&);
};

/// Subgraph induced by s. Vertex ids are preserved.
inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  Graph out;
  out.verts_ = s;
  for (VertexId v : s) {
    if (!g.has_vertex(v))
      throw std::invalid_argument("induced_subgraph: unknown vertex " + std::to_string(v));
    VertexSet nb;
    for (VertexId u : g.neighbors(v))
      if (set_contains(s, u)) nb.push_back(u);
    out.edge_count_ += nb.size();
    out.adj_.emplace(v, std::move(nb));
  }
  out.edge_count_ /= 2;
  out.id_high_water_ = g.id_high_water();
  return out;
}

inline Graph delete_vertices(const Graph& g, const VertexSet& x) {
  for (VertexId v : x)
    if (!g.has_vertex(v))
      throw std::invalid_argument("delete_vertices: unknown vertex " + std::to_string(v));
  return induced_subgraph(g, set_difference(g.vertices(), x));
}

/// Maximal connected vertex sets, ascending by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::unordered_map<VertexId, char> seen;
  seen.reserve(g.vertex_count());
  for (VertexId start : g.vertices()) {
    if (seen.count(start)) continue;
    VertexSet comp;
    std::vector<VertexId> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId u : g.neighbors(v)) {
        if (!seen.count(u)) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    out.push_back(make_set(std::move(comp)));
  }
  return out;
}

/// Delete `removed` and add a fresh clique of `new_clique_size` vertices,
/// each adjacent to every vertex of left_attach and right_attach and to
/// nothing else. Fresh ids are allocated above the graph's high-water id.
inline Graph splice_component(const Graph& g, const VertexSet& component, const VertexSet& removed,
                              int new_clique_size, const VertexSet& left_attach,
                              const VertexSet& right_attach) {
  if (new_clique_size < 0) throw std::invalid_argument("splice_component: negative clique size");
  if (!is_subset(component, g.vertices()))
    throw std::invalid_argument("splice_component: component not a subset of the graph");
  if (!is_subset(removed, component))
    throw std::invalid_argument("splice_component: removed not a subset of the component");
  VertexSet rest = set_difference(component, removed);
  if (!is_subset(left_attach, rest) || !is_subset(right_attach, rest))
    throw std::invalid_argument("splice_component: attach sets must lie in the surviving component");
  if (!sets_disjoint(left_attach, right_attach))
    throw std::invalid_argument("splice_component: attach sets must be disjoint");

  Graph out = delete_vertices(g, removed);
  VertexId next = g.id_high_water() + 1;
  VertexSet fresh;
  for (int i = 0; i < new_clique_size; ++i) fresh.push_back(next + i);

  VertexSet attach = set_union(left_attach, right_attach);
  for (VertexId c : fresh) {
    out.verts_.insert(std::lower_bound(out.verts_.begin(), out.verts_.end(), c), c);
    VertexSet nb = attach;
    for (VertexId d : fresh)
      if (d != c) nb.push_back(d);
    nb = make_set(std::move(nb));
    out.edge_count_ += nb.size();
    out.adj_.emplace(c, std::move(nb));
  }
  for (VertexId a : attach) {
    auto& nb = out.adj_[a];
    for (VertexId c : fresh) nb.insert(std::lower_bound(nb.begin(), nb.end(), c), c);
    out.edge_count_ += fresh.size();
  }
  // fresh-fresh edges were counted twice above, fresh-attach edges twice as well
  out.edge_count_ -= fresh.size() * attach.size();
  out.edge_count_ -= new_clique_size > 0
                         ? static_cast<std::size_t>(new_clique_size) * (new_clique_size - 1) / 2
                         : 0;
  out.id_high_water_ = fresh.empty() ? g.id_high_water() : fresh.back();
  return out;
}

}  // namespace pivd
