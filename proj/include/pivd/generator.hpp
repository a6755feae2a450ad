#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "pivd/graph.hpp"
#include "pivd/kernel.hpp"

namespace pivd {

/// Random proper interval graph on n vertices (unit intervals with
/// uniformly placed centers, vertex ids in center order) plus k_noise
/// extra vertices with random attachments. The instance is YES with budget
/// k_noise by construction. Deterministic per seed.
inline Instance generate_instance(int n, int k_noise, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate_instance: n must be positive");
  if (k_noise < 0) throw std::invalid_argument("generate_instance: k_noise must be nonnegative");
  std::mt19937_64 rng(seed);
  const double width = std::max(1.0, n / 4.0);
  std::uniform_real_distribution<double> place(0.0, width);
  std::vector<double> centers(static_cast<std::size_t>(n));
  for (auto& c : centers) c = place(rng);
  std::sort(centers.begin(), centers.end());

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n && centers[static_cast<std::size_t>(j)] - centers[static_cast<std::size_t>(i)] <= 1.0;
         ++j)
      edges.emplace_back(i, j);

  for (int v = n; v < n + k_noise; ++v) {
    std::uniform_int_distribution<int> degree_pick(1, std::min(10, v));
    const int degree = degree_pick(rng);
    std::vector<int> pool(static_cast<std::size_t>(v));
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    for (int t = 0; t < degree; ++t) edges.emplace_back(pool[static_cast<std::size_t>(t)], v);
  }
  return Instance{Graph::from_edges(n + k_noise, edges), k_noise};
}

}  // namespace pivd
