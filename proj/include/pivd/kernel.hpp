#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "pivd/graph.hpp"
#include "pivd/hitting_set.hpp"
#include "pivd/obstructions.hpp"
#include "pivd/proper_interval.hpp"
#include "pivd/solver.hpp"

namespace pivd {

struct Instance {
  Graph graph;
  int k = 0;
};

/// Modulator T: deleting it leaves a proper interval graph, and the small
/// minimal hitting sets of the whole graph coincide with those inside T.
/// T is the union of the reduced obstruction family plus the minimum
/// deletion set of the remainder.
struct Modulator {
  VertexSet t;
  SetFamily reduced_family;
  VertexSet circ_deletion;
};

struct TraceStep {
  std::string rule;
  VertexSet witness;         // deleted vertices (lemma5: the removed set)
  VertexSet spliced_clique;  // lemma5 only: ids of the inserted clique
  VertexSet attach_left;     // lemma5 only
  VertexSet attach_right;    // lemma5 only
  std::size_t v_before = 0;
  std::size_t v_after = 0;
  int k_before = 0;
  int k_after = 0;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;
};

enum class KernelVerdict { reduced, no, yes_trivial };

inline const char* kernel_verdict_name(KernelVerdict v) {
  switch (v) {
    case KernelVerdict::reduced: return "reduced";
    case KernelVerdict::no: return "no";
    case KernelVerdict::yes_trivial: return "yes-trivial";
  }
  return "?";
}

struct KernelOutcome {
  KernelVerdict verdict = KernelVerdict::reduced;
  std::optional<Instance> instance;  // engaged iff verdict == reduced
  ReductionTrace trace;
  std::string no_reason;  // "components", "lemma3" or "lemma6" when verdict == no
  int final_k = 0;
};

// Worst-case polynomials. Evaluated in double: they dwarf every desk-scale
// quantity by dozens of orders of magnitude, so precision is irrelevant.
inline double delta_bound(int k) {
  return 8.0 * 40320.0 * std::pow(k + 1.0, 8) + k;  // 8 * 8!(k+1)^8 + k
}

inline double epsilon_bound(int k) { return (k + 1.0) * (delta_bound(k) + 2.0); }

inline double zeta_bound(int k) {
  double eps = epsilon_bound(k);
  return (delta_bound(k) * (8.0 * eps + 2.0) + 1.0) * (2.0 * eps * eps + 32.0 * eps + 3.0);
}

/// Modulator construction: stream every small obstruction through the
/// minimal-hitting-set-preserving reduction (d = 8), take the union of the
/// surviving sets, then remove a minimum deletion set of the remainder.
/// Returns nullopt when that minimum exceeds the budget (a NO verdict).
inline std::optional<Modulator> build_modulator(const Instance& inst) {
  if (inst.k < 0) throw std::invalid_argument("build_modulator: k must be nonnegative");
  const Graph& g = inst.graph;
  StreamingFamilyReducer reducer(kSmallObstructionMaxSize, inst.k, g.vertices());
  for_each_small_obstruction(g, [&](const Obstruction& o) {
    reducer.feed(o.vertices);
    return true;
  });
  Modulator mod;
  mod.reduced_family = reducer.finish();
  VertexSet base;
  for (const auto& s : mod.reduced_family.sets) base = set_union(base, s);
  Solution sol = solve(delete_vertices(g, base), inst.k);
  if (!sol.feasible) return std::nullopt;
  mod.circ_deletion = sol.deletion_set;
  mod.t = set_union(base, mod.circ_deletion);
  if (mod.t.size() > kSmallObstructionMaxSize * mod.reduced_family.size() + static_cast<std::size_t>(inst.k))
    throw std::logic_error("build_modulator: modulator exceeds 8|F'| + k");
  if (static_cast<double>(mod.t.size()) > delta_bound(inst.k))
    throw std::logic_error("build_modulator: modulator exceeds the delta bound");
  return mod;
}

/// Irrelevant-vertex rule. When some component of G \ T has a clique K
/// larger than (k+1)(|T|+2): mark, per T-vertex, its k+1 smallest-id
/// neighbours in K, plus the first and last k+1 vertices of K's interval
/// in the ordering; any unmarked vertex of K can be deleted without
/// changing the answer. Returns the smallest-id one.
inline std::optional<VertexId> irrelevant_vertex(const Instance& inst, const Modulator& mod) {
  const Graph& g = inst.graph;
  Graph gt = delete_vertices(g, mod.t);
  if (gt.vertex_count() == 0) return std::nullopt;
  auto ord = proper_interval_ordering(gt);
  if (!ord)
    throw std::invalid_argument("irrelevant_vertex: modulator does not leave a proper interval graph");
  auto windows = detail::neighborhood_windows(gt, *ord);
  std::pair<int, int> best{0, -1};
  for (auto [i, j] : detail::interval_cliques(windows))
    if (j - i > best.second - best.first) best = {i, j};
  const long long clique_size = best.second - best.first + 1;
  const long long eps = (inst.k + 1LL) * (static_cast<long long>(mod.t.size()) + 2);
  if (clique_size <= eps) return std::nullopt;

  VertexSet clique;
  for (int p = best.first; p <= best.second; ++p)
    clique.push_back(ord->order[static_cast<std::size_t>(p)]);
  clique = make_set(std::move(clique));

  std::unordered_set<VertexId> marked;
  for (VertexId v : mod.t) {
    int taken = 0;
    for (VertexId u : g.neighbors(v)) {
      if (!set_contains(clique, u)) continue;
      marked.insert(u);
      if (++taken == inst.k + 1) break;
    }
  }
  for (int p = best.first; p <= std::min(best.first + inst.k, best.second); ++p)
    marked.insert(ord->order[static_cast<std::size_t>(p)]);
  for (int p = std::max(best.second - inst.k, best.first); p <= best.second; ++p)
    marked.insert(ord->order[static_cast<std::size_t>(p)]);

  for (VertexId u : clique)
    if (!marked.count(u)) return u;
  throw std::logic_error("irrelevant_vertex: marking exhausted a clique above the threshold");
}

/// Forced vertices: every x in T with a small obstruction meeting T in
/// exactly {x} must be in every small solution. Returns the set X (possibly
/// empty) or nullopt when |X| > k (a NO verdict). The instance reduces to
/// (G - X, k - |X|).
inline std::optional<VertexSet> forced_vertices(const Instance& inst, const Modulator& mod) {
  const Graph& g = inst.graph;
  VertexSet rest = set_difference(g.vertices(), mod.t);
  VertexSet forced;
  for (VertexId x : mod.t) {
    VertexSet with_x = rest;
    with_x.insert(std::lower_bound(with_x.begin(), with_x.end(), x), x);
    if (find_small_obstruction(induced_subgraph(g, with_x))) forced.push_back(x);
  }
  if (static_cast<int>(forced.size()) > inst.k) return std::nullopt;
  return forced;
}

struct SpliceResult {
  Instance instance;
  VertexSet removed;
  VertexSet new_clique;
  VertexSet attach_left;
  VertexSet attach_right;
};

/// Clique-path shrinking. With eps the measured maximum clique size of
/// G \ T, a component whose clique path has at least
/// zeta = (|T|(8 eps + 2) + 1)(2 eps^2 + 32 eps + 3) maximal cliques
/// contains a run of 2 eps^2 + 32 eps + 3 consecutive cliques unmarked by
/// T-neighbours; the region strictly between positions q = 16 eps + 1 into
/// the run from either side is replaced by a clique of separator size.
inline std::optional<SpliceResult> shrink_clique_path(const Instance& inst, const Modulator& mod) {
  const Graph& g = inst.graph;
  Graph gt = delete_vertices(g, mod.t);
  if (gt.vertex_count() == 0) return std::nullopt;
  if (!is_proper_interval(gt))
    throw std::invalid_argument("shrink_clique_path: modulator does not leave a proper interval graph");
  const long long eps = static_cast<long long>(maximum_clique(gt).size());
  if (eps == 0) return std::nullopt;
  const long long ell = 2 * eps * eps + 32 * eps + 3;
  const long long q = 16 * eps + 1;
  const long long zeta = (static_cast<long long>(mod.t.size()) * (8 * eps + 2) + 1) * ell;

  for (const VertexSet& comp : connected_components(gt)) {
    if (static_cast<long long>(comp.size()) < zeta) continue;  // p <= |V(I)|
    Graph island = induced_subgraph(gt, comp);
    CliquePath cp = clique_path(island);
    const long long p = static_cast<long long>(cp.cliques.size());
    if (p < zeta) continue;

    // Cliques containing any neighbour of a modulator vertex are marked.
    VertexSet t_neighbours;
    for (VertexId v : mod.t)
      for (VertexId u : g.neighbors(v))
        if (set_contains(comp, u)) t_neighbours.push_back(u);
    t_neighbours = make_set(std::move(t_neighbours));
    std::vector<char> clique_marked(static_cast<std::size_t>(p), 0);
    for (VertexId u : t_neighbours) {
      auto [first, last] = cp.span.at(u);
      for (int t = first; t <= last; ++t) clique_marked[static_cast<std::size_t>(t)] = 1;
    }

    long long start = -1;
    long long run = 0;
    for (long long t = 0; t < p; ++t) {
      run = clique_marked[static_cast<std::size_t>(t)] ? 0 : run + 1;
      if (run == ell) {
        start = t - ell + 1;
        break;
      }
    }
    if (start < 0)
      throw std::invalid_argument(
          "shrink_clique_path: no unmarked clique run; a claw must meet T in at least two vertices");

    const long long left_pos = start + q;
    const long long right_pos = start + ell - 1 - q;
    const VertexSet& left = cp.cliques[static_cast<std::size_t>(left_pos)];
    const VertexSet& right = cp.cliques[static_cast<std::size_t>(right_pos)];
    VertexSet x_cands =
        set_difference(left, cp.cliques[static_cast<std::size_t>(left_pos + 1)]);
    VertexSet y_cands =
        set_difference(right, cp.cliques[static_cast<std::size_t>(right_pos - 1)]);
    const VertexId x = x_cands.front();
    const VertexId y = y_cands.front();

    // Minimum x,y-separator: least intersection of consecutive cliques
    // strictly between x's last clique and y's first clique.
    const int last_x = cp.span.at(x).second;
    const int first_y = cp.span.at(y).first;
    long long separator = -1;
    for (int j = last_x; j < first_y; ++j) {
      long long cut = static_cast<long long>(
          set_intersection(cp.cliques[static_cast<std::size_t>(j)],
                           cp.cliques[static_cast<std::size_t>(j + 1)])
              .size());
      if (separator < 0 || cut < separator) separator = cut;
    }

    VertexSet removed;
    for (VertexId v : comp) {
      auto [first, last] = cp.span.at(v);
      if (first > left_pos && last < right_pos) removed.push_back(v);
    }
    if (static_cast<long long>(removed.size()) <= separator)
      throw std::logic_error("shrink_clique_path: splice would not shrink the graph");

    Graph next = splice_component(g, comp, removed, static_cast<int>(separator), left, right);
    SpliceResult result;
    result.removed = removed;
    result.new_clique = set_difference(next.vertices(), g.vertices());
    result.attach_left = left;
    result.attach_right = right;
    result.instance = Instance{std::move(next), inst.k};
    return result;
  }
  return std::nullopt;
}

/// Kernelization driver. Drops proper interval components, answers NO when
/// more components remain than the budget, then applies the irrelevant
/// vertex, forced vertex and clique-path shrinking rules per component,
/// rebuilding the modulator from scratch after every change.
inline KernelOutcome kernelize(const Instance& inst) {
  if (inst.k < 0) throw std::invalid_argument("kernelize: k must be nonnegative");
  Graph g = inst.graph;
  int k = inst.k;
  KernelOutcome out;

  auto log_step = [&](const char* rule, VertexSet witness, const Graph& after, int k_after,
                      VertexSet clique = {}, VertexSet left = {}, VertexSet right = {}) {
    if (after.vertex_count() >= g.vertex_count() && k_after >= k)
      throw std::logic_error("kernelize: rule application made no progress");
    out.trace.steps.push_back(TraceStep{rule, std::move(witness), std::move(clique), std::move(left),
                                        std::move(right), g.vertex_count(), after.vertex_count(), k,
                                        k_after});
  };

  std::vector<Modulator> fixpoint_mods;
  while (true) {
    bool dropped = true;
    while (dropped) {
      dropped = false;
      for (const VertexSet& comp : connected_components(g)) {
        if (is_proper_interval(induced_subgraph(g, comp))) {
          Graph next = delete_vertices(g, comp);
          log_step("drop-pi-component", comp, next, k);
          g = std::move(next);
          dropped = true;
          break;
        }
      }
    }
    if (g.vertex_count() == 0) {
      out.verdict = KernelVerdict::yes_trivial;
      out.final_k = k;
      return out;
    }
    std::vector<VertexSet> comps = connected_components(g);
    if (static_cast<int>(comps.size()) > k) {
      out.verdict = KernelVerdict::no;
      out.no_reason = "components";
      out.final_k = k;
      return out;
    }

    bool applied = false;
    fixpoint_mods.clear();
    for (const VertexSet& comp : comps) {
      Instance local{induced_subgraph(g, comp), k};
      auto mod = build_modulator(local);
      if (!mod) {
        out.verdict = KernelVerdict::no;
        out.no_reason = "lemma3";
        out.final_k = k;
        return out;
      }
      if (auto v = irrelevant_vertex(local, *mod)) {
        Graph next = delete_vertices(g, {*v});
        log_step("lemma4", {*v}, next, k);
        g = std::move(next);
        applied = true;
        break;
      }
      auto forced = forced_vertices(local, *mod);
      if (!forced) {
        out.verdict = KernelVerdict::no;
        out.no_reason = "lemma6";
        out.final_k = k;
        return out;
      }
      if (!forced->empty()) {
        Graph next = delete_vertices(g, *forced);
        int k_after = k - static_cast<int>(forced->size());
        log_step("lemma6", *forced, next, k_after);
        g = std::move(next);
        k = k_after;
        applied = true;
        break;
      }
      if (auto sp = shrink_clique_path(local, *mod)) {
        Graph next = splice_component(g, comp, sp->removed,
                                      static_cast<int>(sp->new_clique.size()), sp->attach_left,
                                      sp->attach_right);
        VertexSet fresh = set_difference(next.vertices(), g.vertices());
        log_step("lemma5", sp->removed, next, k, fresh, sp->attach_left, sp->attach_right);
        g = std::move(next);
        applied = true;
        break;
      }
      fixpoint_mods.push_back(std::move(*mod));
    }
    if (!applied) break;
  }

  // Fixpoint diagnostics: with the forced-vertex rule exhausted, every
  // modulator vertex has neighbours in at most two components of its G_T.
  std::vector<VertexSet> comps = connected_components(g);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    Graph local = induced_subgraph(g, comps[c]);
    const Modulator& mod = fixpoint_mods[c];
    Graph gt = delete_vertices(local, mod.t);
    std::vector<VertexSet> gt_comps = connected_components(gt);
    for (VertexId v : mod.t) {
      int touched = 0;
      const VertexSet& nb = local.neighbors(v);
      for (const VertexSet& part : gt_comps) {
        for (VertexId u : nb)
          if (set_contains(part, u)) {
            ++touched;
            break;
          }
      }
      if (touched > 2)
        throw std::logic_error("kernelize: modulator vertex touching more than two components");
    }
  }
  if (static_cast<double>(g.vertex_count()) >
      2.0 * inst.k * delta_bound(inst.k) * zeta_bound(inst.k) * epsilon_bound(inst.k))
    throw std::logic_error("kernelize: output exceeds the worst-case size bound");

  out.verdict = KernelVerdict::reduced;
  out.instance = Instance{std::move(g), k};
  out.final_k = k;
  return out;
}

/// Replays a trace from an instance; the splice steps must reproduce the
/// recorded fresh ids, so a replayed trace rebuilds the reduced instance
/// exactly.
inline Instance replay_trace(const Instance& start, const ReductionTrace& trace) {
  Graph g = start.graph;
  int k = start.k;
  for (const TraceStep& step : trace.steps) {
    if (step.rule == "drop-pi-component" || step.rule == "lemma4" || step.rule == "lemma6") {
      g = delete_vertices(g, step.witness);
      if (step.rule == "lemma6") k -= static_cast<int>(step.witness.size());
    } else if (step.rule == "lemma5") {
      VertexSet comp;
      VertexId probe = step.witness.empty() ? step.attach_left.front() : step.witness.front();
      for (const VertexSet& c : connected_components(g))
        if (set_contains(c, probe)) {
          comp = c;
          break;
        }
      Graph next = splice_component(g, comp, step.witness,
                                    static_cast<int>(step.spliced_clique.size()), step.attach_left,
                                    step.attach_right);
      VertexSet fresh = set_difference(next.vertices(), g.vertices());
      if (fresh != step.spliced_clique)
        throw std::logic_error("replay_trace: splice produced different fresh ids");
      g = std::move(next);
    } else {
      throw std::invalid_argument("replay_trace: unknown rule " + step.rule);
    }
  }
  return Instance{std::move(g), k};
}

}  // namespace pivd
