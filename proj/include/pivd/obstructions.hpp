#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "pivd/graph.hpp"
#include "pivd/hitting_set.hpp"

namespace pivd {

/// Forbidden induced subgraphs of proper interval graphs. Kind order is the
/// tie-break order used by find_small_obstruction.
enum class ObstructionKind { claw, hole, net, tent };

struct Obstruction {
  ObstructionKind kind;
  VertexSet vertices;   // sorted
  int hole_length = 0;  // |vertices| iff kind == hole, else 0
};

inline const char* obstruction_kind_name(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::claw: return "claw";
    case ObstructionKind::hole: return "hole";
    case ObstructionKind::net: return "net";
    case ObstructionKind::tent: return "tent";
  }
  return "?";
}

/// Largest forbidden pattern handled by the small-obstruction family.
inline constexpr int kSmallObstructionMaxSize = 8;

namespace detail {

// Local-index view with adjacency bitsets; all pattern searches run on it.
struct DenseView {
  std::vector<VertexId> ids;  // local index -> id, ascending
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<std::uint64_t>> bits;
  int n = 0;

  explicit DenseView(const Graph& g) : ids(g.vertices()), n(static_cast<int>(g.vertex_count())) {
    std::unordered_map<VertexId, int> index;
    index.reserve(ids.size());
    for (int i = 0; i < n; ++i) index[ids[static_cast<std::size_t>(i)]] = i;
    adj.resize(ids.size());
    bits.assign(ids.size(), std::vector<std::uint64_t>((ids.size() + 63) / 64, 0));
    for (int i = 0; i < n; ++i) {
      for (VertexId u : g.neighbors(ids[static_cast<std::size_t>(i)])) {
        int j = index.at(u);
        adj[static_cast<std::size_t>(i)].push_back(j);
        bits[static_cast<std::size_t>(i)][static_cast<std::size_t>(j >> 6)] |= std::uint64_t{1}
                                                                              << (j & 63);
      }
      std::sort(adj[static_cast<std::size_t>(i)].begin(), adj[static_cast<std::size_t>(i)].end());
    }
  }

  bool adjacent(int a, int b) const {
    return (bits[static_cast<std::size_t>(a)][static_cast<std::size_t>(b >> 6)] >> (b & 63)) & 1;
  }

  VertexSet to_ids(const std::vector<int>& local) const {
    VertexSet out;
    out.reserve(local.size());
    for (int v : local) out.push_back(ids[static_cast<std::size_t>(v)]);
    return make_set(std::move(out));
  }
};

// All claws whose minimum vertex is m, as sorted local-index sets.
inline std::vector<std::vector<int>> claws_with_min(const DenseView& view, int m) {
  std::vector<std::vector<int>> out;
  const auto& nm = view.adj[static_cast<std::size_t>(m)];
  // m is the center
  for (std::size_t ia = 0; ia < nm.size(); ++ia) {
    int a = nm[ia];
    if (a <= m) continue;
    for (std::size_t ib = ia + 1; ib < nm.size(); ++ib) {
      int b = nm[ib];
      if (view.adjacent(a, b)) continue;
      for (std::size_t ic = ib + 1; ic < nm.size(); ++ic) {
        int c = nm[ic];
        if (!view.adjacent(a, c) && !view.adjacent(b, c)) out.push_back({m, a, b, c});
      }
    }
  }
  // m is a leaf of a center c0 > m
  for (int c0 : nm) {
    if (c0 <= m) continue;
    const auto& nc = view.adj[static_cast<std::size_t>(c0)];
    for (std::size_t ix = 0; ix < nc.size(); ++ix) {
      int x = nc[ix];
      if (x <= m || view.adjacent(x, m)) continue;
      for (std::size_t iy = ix + 1; iy < nc.size(); ++iy) {
        int y = nc[iy];
        if (view.adjacent(y, m) || view.adjacent(x, y)) continue;
        std::vector<int> s{m, c0, x, y};
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All induced cycles of length 4..max_len whose minimum vertex is m.
// Canonical traversal: the path starts at m's smaller cycle-neighbour and
// closes at the larger one, so each hole is produced exactly once.
inline std::vector<std::vector<int>> holes_with_min(const DenseView& view, int m, int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<int> path{m, 0};
  std::vector<char> on_path(static_cast<std::size_t>(view.n), 0);
  on_path[static_cast<std::size_t>(m)] = 1;

  auto compatible = [&](int w) {
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
      if (view.adjacent(w, path[i])) return false;
    return true;
  };

  auto dfs = [&](auto&& self) -> void {
    int x = path.back();
    if (path.size() >= 3) {
      for (int w : view.adj[static_cast<std::size_t>(x)]) {
        if (w <= path[1] || on_path[static_cast<std::size_t>(w)]) continue;
        if (!view.adjacent(w, m)) continue;
        if (!compatible(w)) continue;
        std::vector<int> hole = path;
        hole.push_back(w);
        std::sort(hole.begin(), hole.end());
        out.push_back(std::move(hole));
      }
    }
    if (static_cast<int>(path.size()) >= max_len - 1) return;
    for (int w : view.adj[static_cast<std::size_t>(x)]) {
      if (w <= m || on_path[static_cast<std::size_t>(w)]) continue;
      if (view.adjacent(w, m)) continue;
      if (!compatible(w)) continue;
      path.push_back(w);
      on_path[static_cast<std::size_t>(w)] = 1;
      self(self);
      path.pop_back();
      on_path[static_cast<std::size_t>(w)] = 0;
    }
  };

  for (int v1 : view.adj[static_cast<std::size_t>(m)]) {
    if (v1 <= m) continue;
    path[1] = v1;
    on_path[static_cast<std::size_t>(v1)] = 1;
    dfs(dfs);
    on_path[static_cast<std::size_t>(v1)] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Nets and tents are anchored on triangles (a < b < c).
template <typename TriangleFn>
inline void for_each_triangle(const DenseView& view, TriangleFn&& fn) {
  for (int a = 0; a < view.n; ++a) {
    const auto& na = view.adj[static_cast<std::size_t>(a)];
    for (int b : na) {
      if (b <= a) continue;
      for (int c : na) {
        if (c <= b) continue;
        if (view.adjacent(b, c)) fn(a, b, c);
      }
    }
  }
}

// Net: triangle plus one private pendant per triangle vertex, pendants
// pairwise nonadjacent.
inline std::vector<std::vector<int>> all_nets(const DenseView& view) {
  std::vector<std::vector<int>> out;
  for_each_triangle(view, [&](int a, int b, int c) {
    auto pendants = [&](int at, int o1, int o2) {
      std::vector<int> v;
      for (int x : view.adj[static_cast<std::size_t>(at)])
        if (x != o1 && x != o2 && !view.adjacent(x, o1) && !view.adjacent(x, o2)) v.push_back(x);
      return v;
    };
    std::vector<int> pa = pendants(a, b, c);
    if (pa.empty()) return;
    std::vector<int> pb = pendants(b, a, c);
    if (pb.empty()) return;
    std::vector<int> pc = pendants(c, a, b);
    if (pc.empty()) return;
    for (int x : pa)
      for (int y : pb) {
        if (view.adjacent(x, y)) continue;
        for (int z : pc) {
          if (view.adjacent(x, z) || view.adjacent(y, z)) continue;
          std::vector<int> s{a, b, c, x, y, z};
          std::sort(s.begin(), s.end());
          out.push_back(std::move(s));
        }
      }
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Tent: triangle a,b,c plus x adjacent to exactly {a,b}, y to {b,c},
// z to {a,c} within the pattern; x,y,z pairwise nonadjacent.
inline std::vector<std::vector<int>> all_tents(const DenseView& view) {
  std::vector<std::vector<int>> out;
  for_each_triangle(view, [&](int a, int b, int c) {
    auto wedges = [&](int p, int q, int other) {
      std::vector<int> v;
      for (int x : view.adj[static_cast<std::size_t>(p)])
        if (x != other && view.adjacent(x, q) && !view.adjacent(x, other)) v.push_back(x);
      return v;
    };
    std::vector<int> xs = wedges(a, b, c);
    if (xs.empty()) return;
    std::vector<int> ys = wedges(b, c, a);
    if (ys.empty()) return;
    std::vector<int> zs = wedges(a, c, b);
    if (zs.empty()) return;
    for (int x : xs)
      for (int y : ys) {
        if (view.adjacent(x, y)) continue;
        for (int z : zs) {
          if (view.adjacent(x, z) || view.adjacent(y, z)) continue;
          std::vector<int> s{a, b, c, x, y, z};
          std::sort(s.begin(), s.end());
          out.push_back(std::move(s));
        }
      }
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Lexicographically least set produced by a per-minimum-vertex enumerator:
// the first vertex with any witness already pins the least first element.
template <typename PerMin>
inline std::optional<std::vector<int>> least_by_min_vertex(const DenseView& view, PerMin&& per_min) {
  for (int m = 0; m < view.n; ++m) {
    std::vector<std::vector<int>> found = per_min(m);
    if (!found.empty()) return found.front();
  }
  return std::nullopt;
}

}  // namespace detail

/// Least small obstruction (claw, hole of length 4..8, net, or tent) under
/// the (kind, sorted vertex set) order, or nullopt when none exists.
inline std::optional<Obstruction> find_small_obstruction(const Graph& g) {
  detail::DenseView view(g);
  if (auto claw = detail::least_by_min_vertex(view, [&](int m) { return detail::claws_with_min(view, m); }))
    return Obstruction{ObstructionKind::claw, view.to_ids(*claw), 0};
  if (auto hole = detail::least_by_min_vertex(
          view, [&](int m) { return detail::holes_with_min(view, m, kSmallObstructionMaxSize); }))
    return Obstruction{ObstructionKind::hole, view.to_ids(*hole), static_cast<int>(hole->size())};
  std::vector<std::vector<int>> nets = detail::all_nets(view);
  if (!nets.empty()) return Obstruction{ObstructionKind::net, view.to_ids(nets.front()), 0};
  std::vector<std::vector<int>> tents = detail::all_tents(view);
  if (!tents.empty()) return Obstruction{ObstructionKind::tent, view.to_ids(tents.front()), 0};
  return std::nullopt;
}

/// Stream every small obstruction exactly once, kind by kind (claws, holes,
/// nets, tents), each kind in lexicographic vertex-set order. The callback
/// returns false to stop early; the return value is false iff it did.
template <typename Fn>
inline bool for_each_small_obstruction(const Graph& g, Fn&& fn) {
  detail::DenseView view(g);
  for (int m = 0; m < view.n; ++m)
    for (const auto& s : detail::claws_with_min(view, m))
      if (!fn(Obstruction{ObstructionKind::claw, view.to_ids(s), 0})) return false;
  for (int m = 0; m < view.n; ++m)
    for (const auto& s : detail::holes_with_min(view, m, kSmallObstructionMaxSize))
      if (!fn(Obstruction{ObstructionKind::hole, view.to_ids(s), static_cast<int>(s.size())}))
        return false;
  for (const auto& s : detail::all_nets(view))
    if (!fn(Obstruction{ObstructionKind::net, view.to_ids(s), 0})) return false;
  for (const auto& s : detail::all_tents(view))
    if (!fn(Obstruction{ObstructionKind::tent, view.to_ids(s), 0})) return false;
  return true;
}

struct SmallObstructionFamily {
  SetFamily family;
  bool truncated = false;
};

/// Family of all vertex sets inducing a small obstruction, deduplicated,
/// sorted lexicographically. With a limit, enumeration stops after that
/// many sets and the result is flagged truncated.
inline SmallObstructionFamily enumerate_small_obstructions(const Graph& g,
                                                           std::optional<std::size_t> limit = {}) {
  SmallObstructionFamily out;
  std::vector<std::vector<int>> sets;
  out.truncated = !for_each_small_obstruction(g, [&](const Obstruction& o) {
    if (limit && sets.size() >= *limit) return false;
    sets.push_back(o.vertices);
    return true;
  });
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  out.family = SetFamily::make(std::move(sets), g.vertices(), kSmallObstructionMaxSize);
  return out;
}

namespace detail {

// Maximum cardinality search; reversed visit order is a perfect elimination
// ordering iff the graph is chordal.
inline bool is_chordal(const DenseView& view) {
  const int n = view.n;
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<char> numbered(static_cast<std::size_t>(n), 0);
  std::vector<int> visit;
  visit.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!numbered[static_cast<std::size_t>(v)] &&
          (best == -1 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
        best = v;
    numbered[static_cast<std::size_t>(best)] = 1;
    visit.push_back(best);
    for (int u : view.adj[static_cast<std::size_t>(best)])
      if (!numbered[static_cast<std::size_t>(u)]) ++weight[static_cast<std::size_t>(u)];
  }
  std::vector<int> pos(static_cast<std::size_t>(n));  // elimination position = reverse visit order
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(visit[static_cast<std::size_t>(i)])] = n - 1 - i;
  for (int v = 0; v < n; ++v) {
    int u0 = -1;
    for (int u : view.adj[static_cast<std::size_t>(v)])
      if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)] &&
          (u0 == -1 || pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(u0)]))
        u0 = u;
    if (u0 == -1) continue;
    for (int u : view.adj[static_cast<std::size_t>(v)])
      if (u != u0 && pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)] &&
          !view.adjacent(u0, u))
        return false;
  }
  return true;
}

// Hole extraction in a non-chordal graph: for a vertex v with nonadjacent
// neighbours u, w, a shortest u-w path avoiding the rest of N[v] closes an
// induced cycle through v. Some triple always works.
inline std::optional<std::vector<int>> extract_any_hole(const DenseView& view) {
  const int n = view.n;
  for (int v = 0; v < n; ++v) {
    const auto& nv = view.adj[static_cast<std::size_t>(v)];
    for (std::size_t iu = 0; iu < nv.size(); ++iu) {
      for (std::size_t iw = iu + 1; iw < nv.size(); ++iw) {
        int u = nv[iu], w = nv[iw];
        if (view.adjacent(u, w)) continue;
        std::vector<char> allowed(static_cast<std::size_t>(n), 1);
        allowed[static_cast<std::size_t>(v)] = 0;
        for (int x : nv)
          if (x != u && x != w) allowed[static_cast<std::size_t>(x)] = 0;
        std::vector<int> parent(static_cast<std::size_t>(n), -2);
        std::deque<int> queue{u};
        parent[static_cast<std::size_t>(u)] = -1;
        while (!queue.empty() && parent[static_cast<std::size_t>(w)] == -2) {
          int x = queue.front();
          queue.pop_front();
          for (int y : view.adj[static_cast<std::size_t>(x)]) {
            if (!allowed[static_cast<std::size_t>(y)] || parent[static_cast<std::size_t>(y)] != -2)
              continue;
            parent[static_cast<std::size_t>(y)] = x;
            queue.push_back(y);
          }
        }
        if (parent[static_cast<std::size_t>(w)] == -2) continue;
        std::vector<int> hole{v};
        for (int x = w; x != -1; x = parent[static_cast<std::size_t>(x)]) hole.push_back(x);
        std::sort(hole.begin(), hole.end());
        return hole;
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Some induced cycle of length >= min_length, or nullopt. min_length >= 4.
inline std::optional<Obstruction> find_any_hole(const Graph& g, int min_length) {
  if (min_length < 4) throw std::invalid_argument("find_any_hole: min_length must be at least 4");
  detail::DenseView view(g);
  if (detail::is_chordal(view)) return std::nullopt;
  if (min_length == 4) {
    auto hole = detail::extract_any_hole(view);
    if (!hole) throw std::logic_error("find_any_hole: non-chordal graph yielded no certificate");
    return Obstruction{ObstructionKind::hole, view.to_ids(*hole), static_cast<int>(hole->size())};
  }
  // Longer minimum lengths fall back to explicit induced-cycle search.
  for (int m = 0; m < view.n; ++m) {
    std::vector<std::vector<int>> found;
    std::vector<int> path{m, 0};
    std::vector<char> on_path(static_cast<std::size_t>(view.n), 0);
    on_path[static_cast<std::size_t>(m)] = 1;
    auto compatible = [&](int w) {
      for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (view.adjacent(w, path[i])) return false;
      return true;
    };
    auto dfs = [&](auto&& self) -> bool {
      int x = path.back();
      if (static_cast<int>(path.size()) + 1 >= min_length && path.size() >= 3) {
        for (int w : view.adj[static_cast<std::size_t>(x)]) {
          if (w <= path[1] || on_path[static_cast<std::size_t>(w)]) continue;
          if (!view.adjacent(w, m) || !compatible(w)) continue;
          std::vector<int> hole = path;
          hole.push_back(w);
          std::sort(hole.begin(), hole.end());
          found.push_back(std::move(hole));
          return true;
        }
      }
      for (int w : view.adj[static_cast<std::size_t>(x)]) {
        if (w <= m || on_path[static_cast<std::size_t>(w)]) continue;
        if (view.adjacent(w, m) || !compatible(w)) continue;
        path.push_back(w);
        on_path[static_cast<std::size_t>(w)] = 1;
        bool done = self(self);
        path.pop_back();
        on_path[static_cast<std::size_t>(w)] = 0;
        if (done) return true;
      }
      return false;
    };
    for (int v1 : view.adj[static_cast<std::size_t>(m)]) {
      if (v1 <= m) continue;
      path.resize(2);
      path[1] = v1;
      on_path[static_cast<std::size_t>(v1)] = 1;
      bool done = dfs(dfs);
      on_path[static_cast<std::size_t>(v1)] = 0;
      if (done)
        return Obstruction{ObstructionKind::hole, view.to_ids(found.front()),
                           static_cast<int>(found.front().size())};
    }
  }
  return std::nullopt;
}

}  // namespace pivd
