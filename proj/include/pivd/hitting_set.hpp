#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pivd/errors.hpp"

namespace pivd {

/// Family of nonempty element subsets, each of size at most max_set_size.
/// Sets are stored sorted and duplicate-free, the family itself in
/// lexicographic order.
struct SetFamily {
  std::vector<int> universe;             // sorted
  std::vector<std::vector<int>> sets;    // lex-sorted, each sorted
  int max_set_size = 0;

  std::size_t size() const { return sets.size(); }

  static SetFamily make(std::vector<std::vector<int>> sets, std::vector<int> universe, int d) {
    if (d < 1) throw std::invalid_argument("set family: max set size must be positive");
    SetFamily f;
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    f.universe = std::move(universe);
    f.max_set_size = d;
    for (auto& s : sets) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      if (s.empty()) throw std::invalid_argument("set family: empty set");
      if (static_cast<int>(s.size()) > d)
        throw std::invalid_argument("set family: set larger than declared bound");
      for (int e : s)
        if (!std::binary_search(f.universe.begin(), f.universe.end(), e))
          throw std::invalid_argument("set family: element outside universe: " + std::to_string(e));
    }
    std::sort(sets.begin(), sets.end());
    for (std::size_t i = 1; i < sets.size(); ++i)
      if (sets[i] == sets[i - 1]) throw std::invalid_argument("set family: duplicate set");
    f.sets = std::move(sets);
    return f;
  }

  /// Universe inferred as the union of the sets.
  static SetFamily make(std::vector<std::vector<int>> sets, int d) {
    std::vector<int> uni;
    for (const auto& s : sets) uni.insert(uni.end(), s.begin(), s.end());
    return make(std::move(sets), std::move(uni), d);
  }
};

/// Sets whose pairwise intersections all equal the core; every petal set
/// minus the core is nonempty.
struct Sunflower {
  std::vector<std::vector<int>> petals;  // the member sets themselves
  std::vector<int> core;
};

/// d!(p-1)^d, or nullopt when it exceeds the uint64 range (then no family
/// we can hold is ever above the bound).
inline std::optional<std::uint64_t> sunflower_bound(int d, int petal_count) {
  std::uint64_t bound = 1;
  const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max() / 2;
  for (int i = 2; i <= d; ++i) {
    if (bound > cap / static_cast<std::uint64_t>(i)) return std::nullopt;
    bound *= static_cast<std::uint64_t>(i);
  }
  const std::uint64_t base = static_cast<std::uint64_t>(std::max(petal_count - 1, 0));
  for (int i = 0; i < d; ++i) {
    if (base != 0 && bound > cap / base) return std::nullopt;
    bound *= base;
  }
  return bound;
}

namespace detail {

inline bool sorted_contains(const std::vector<int>& s, int e) {
  return std::binary_search(s.begin(), s.end(), e);
}

// Constructive search: a maximal pairwise-disjoint subfamily, else recurse
// into the link of the most frequent element (ties to the smallest id).
inline std::optional<Sunflower> sunflower_greedy(const std::vector<std::vector<int>>& sets,
                                                 int petal_count) {
  if (sets.empty()) return std::nullopt;
  std::vector<std::size_t> chosen;
  std::unordered_set<int> used;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool disjoint = true;
    for (int e : sets[i])
      if (used.count(e)) {
        disjoint = false;
        break;
      }
    if (disjoint) {
      chosen.push_back(i);
      for (int e : sets[i]) used.insert(e);
    }
  }
  if (static_cast<int>(chosen.size()) >= petal_count) {
    Sunflower s;
    for (int i = 0; i < petal_count; ++i) s.petals.push_back(sets[chosen[static_cast<std::size_t>(i)]]);
    return s;
  }
  std::unordered_map<int, int> occurrences;
  for (const auto& s : sets)
    for (int e : s) ++occurrences[e];
  int x = 0;
  int best = -1;
  for (const auto& [e, c] : occurrences)
    if (c > best || (c == best && e < x)) {
      best = c;
      x = e;
    }
  std::vector<std::vector<int>> link;
  for (const auto& s : sets) {
    if (!sorted_contains(s, x)) continue;
    std::vector<int> rest;
    rest.reserve(s.size() - 1);
    for (int e : s)
      if (e != x) rest.push_back(e);
    if (!rest.empty()) link.push_back(std::move(rest));
  }
  auto sub = sunflower_greedy(link, petal_count);
  if (!sub) return std::nullopt;
  Sunflower out;
  out.core = sub->core;
  out.core.insert(std::lower_bound(out.core.begin(), out.core.end(), x), x);
  for (auto& petal : sub->petals) {
    petal.insert(std::lower_bound(petal.begin(), petal.end(), x), x);
    out.petals.push_back(std::move(petal));
  }
  return out;
}

// Complete search used only above the d!(p-1)^d bound, where the greedy
// route has no guarantee in a corner case (a singleton equal to the chosen
// link element). Candidate cores are pairwise intersections plus the empty
// set; petal packing is exact backtracking.
inline std::optional<Sunflower> sunflower_exhaustive(const std::vector<std::vector<int>>& sets,
                                                     int petal_count) {
  std::vector<std::vector<int>> cores{{}};
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      std::vector<int> y;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                            std::back_inserter(y));
      if (!y.empty()) cores.push_back(std::move(y));
    }
  std::sort(cores.begin(), cores.end());
  cores.erase(std::unique(cores.begin(), cores.end()), cores.end());
  for (const auto& core : cores) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (sets[i].size() > core.size() &&
          std::includes(sets[i].begin(), sets[i].end(), core.begin(), core.end()))
        members.push_back(i);
    if (static_cast<int>(members.size()) < petal_count) continue;
    std::vector<std::size_t> picked;
    std::unordered_set<int> used;
    auto fits = [&](std::size_t idx) {
      for (int e : sets[idx])
        if (!sorted_contains(core, e) && used.count(e)) return false;
      return true;
    };
    auto dfs = [&](auto&& self, std::size_t from) -> bool {
      if (static_cast<int>(picked.size()) == petal_count) return true;
      for (std::size_t t = from; t < members.size(); ++t) {
        if (members.size() - t < static_cast<std::size_t>(petal_count) - picked.size()) return false;
        std::size_t idx = members[t];
        if (!fits(idx)) continue;
        picked.push_back(idx);
        for (int e : sets[idx])
          if (!sorted_contains(core, e)) used.insert(e);
        if (self(self, t + 1)) return true;
        for (int e : sets[idx])
          if (!sorted_contains(core, e)) used.erase(e);
        picked.pop_back();
      }
      return false;
    };
    if (dfs(dfs, 0)) {
      Sunflower s;
      s.core = core;
      for (std::size_t idx : picked) s.petals.push_back(sets[idx]);
      return s;
    }
  }
  return std::nullopt;
}

inline std::optional<Sunflower> find_sunflower_in(const std::vector<std::vector<int>>& sets, int d,
                                                  int petal_count) {
  if (petal_count < 1) throw std::invalid_argument("find_sunflower: petal count must be positive");
  if (auto s = sunflower_greedy(sets, petal_count)) return s;
  auto bound = sunflower_bound(d, petal_count);
  if (bound && sets.size() > *bound) {
    auto s = sunflower_exhaustive(sets, petal_count);
    if (!s) throw std::logic_error("find_sunflower: family above the bound has no sunflower");
    return s;
  }
  return std::nullopt;
}

}  // namespace detail

/// Sunflower with exactly petal_count petals drawn from f, or nullopt.
/// Always succeeds when |f| > d!(petal_count-1)^d.
inline std::optional<Sunflower> find_sunflower(const SetFamily& f, int petal_count) {
  return detail::find_sunflower_in(f.sets, f.max_set_size, petal_count);
}

/// F' <= F preserving exactly the minimal hitting sets of size at most k:
/// while a (k+2)-petal sunflower exists, drop its last petal set.
/// Guarantees |F'| <= d!(k+1)^d.
inline SetFamily reduce_preserving_minimal(const SetFamily& f, int k) {
  if (k < 0) throw std::invalid_argument("reduce_preserving_minimal: k must be nonnegative");
  SetFamily out = f;
  while (true) {
    auto s = detail::find_sunflower_in(out.sets, out.max_set_size, k + 2);
    if (!s) break;
    const auto& drop = s->petals.back();
    auto it = std::lower_bound(out.sets.begin(), out.sets.end(), drop);
    out.sets.erase(it);
  }
  return out;
}

/// Incremental variant of reduce_preserving_minimal for families produced
/// by a generator: feed sets one by one, keeping the working family reduced
/// throughout. Dropping a petal of a sunflower already in memory preserves
/// minimal hitting sets of the full (fed so far + still unseen) family, so
/// the interleaving is sound.
class StreamingFamilyReducer {
 public:
  StreamingFamilyReducer(int d, int k, std::vector<int> universe)
      : d_(d), k_(k), universe_(std::move(universe)) {
    if (d < 1) throw std::invalid_argument("streaming reducer: max set size must be positive");
    if (k < 0) throw std::invalid_argument("streaming reducer: k must be nonnegative");
    std::sort(universe_.begin(), universe_.end());
    universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());
  }

  void feed(std::vector<int> set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.empty() || static_cast<int>(set.size()) > d_)
      throw std::invalid_argument("streaming reducer: set size out of range");
    auto it = std::lower_bound(sets_.begin(), sets_.end(), set);
    if (it != sets_.end() && *it == set) return;
    sets_.insert(it, std::move(set));
    while (true) {
      auto s = detail::find_sunflower_in(sets_, d_, k_ + 2);
      if (!s) break;
      auto drop = std::lower_bound(sets_.begin(), sets_.end(), s->petals.back());
      sets_.erase(drop);
    }
  }

  SetFamily finish() { return SetFamily::make(std::move(sets_), std::move(universe_), d_); }

 private:
  int d_;
  int k_;
  std::vector<int> universe_;
  std::vector<std::vector<int>> sets_;
};

/// All inclusion-minimal hitting sets of size at most k, by exhaustive
/// search over the universe, lexicographically sorted. Guarded to small
/// universes.
inline std::vector<std::vector<int>> minimal_hitting_sets(const SetFamily& f, int k) {
  if (k < 0) throw std::invalid_argument("minimal_hitting_sets: k must be nonnegative");
  if (f.universe.size() > 22)
    throw ResourceLimitError("minimal_hitting_sets: universe larger than 22 elements");
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto hits_all = [&](const std::vector<int>& z) {
    for (const auto& s : f.sets) {
      bool hit = false;
      for (int e : s)
        if (std::binary_search(z.begin(), z.end(), e)) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
    return true;
  };
  auto is_minimal = [&](const std::vector<int>& z) {
    for (int removed : z) {
      bool some_set_needs_it = false;
      for (const auto& s : f.sets) {
        bool hit_elsewhere = false;
        bool hit_by_removed = false;
        for (int e : s) {
          if (e == removed && std::binary_search(z.begin(), z.end(), e)) hit_by_removed = true;
          if (e != removed && std::binary_search(z.begin(), z.end(), e)) hit_elsewhere = true;
        }
        if (hit_by_removed && !hit_elsewhere) {
          some_set_needs_it = true;
          break;
        }
      }
      if (!some_set_needs_it) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (hits_all(current) && is_minimal(current)) out.push_back(current);
    if (static_cast<int>(current.size()) == k) return;
    for (std::size_t i = from; i < f.universe.size(); ++i) {
      current.push_back(f.universe[i]);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Plain-text hypergraph: first line "d k", then one set per line of
/// space-separated element ids.
struct FamilyInstance {
  SetFamily family;
  int k = 0;
};

inline FamilyInstance parse_family_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  int d = 0, k = -1;
  std::vector<std::vector<int>> sets;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    if (k < 0) {
      if (!(ls >> d >> k) || d < 1 || k < 0) throw ParseError("expected header \"d k\"", lineno);
      continue;
    }
    std::vector<int> set;
    int e;
    while (ls >> e) set.push_back(e);
    if (!ls.eof()) throw ParseError("bad element id", lineno);
    if (!set.empty()) sets.push_back(std::move(set));
  }
  if (k < 0) throw ParseError("missing header \"d k\"", lineno == 0 ? 1 : lineno);
  try {
    return FamilyInstance{SetFamily::make(std::move(sets), d), k};
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), lineno);
  }
}

inline std::string format_family_text(const SetFamily& f, int k) {
  std::ostringstream out;
  out << f.max_set_size << ' ' << k << '\n';
  for (const auto& s : f.sets) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace pivd
