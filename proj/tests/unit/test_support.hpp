#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "trifree/graph.hpp"

namespace trifree::testing {

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, edges);
}

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(n, edges);
}

inline Graph random_permutation_of(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return permute(g, perm);
}

/// Random graph on n <= 64 vertices; triangles rejected edge by edge if asked.
inline Graph random_graph(int n, double p, bool triangle_free, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!coin(rng)) continue;
      if (triangle_free && (rows[static_cast<std::size_t>(u)] & rows[static_cast<std::size_t>(v)])) continue;
      rows[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
      rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
  }
  return Graph::from_rows(rows);
}

/// Brute-force independence number over all vertex subsets.
inline int brute_force_alpha(const Graph& g) {
  const int n = g.order();
  const auto rows = g.word_rows();
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const int size = std::popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (std::uint64_t b = s; b && independent; b &= b - 1) {
      independent = (rows[static_cast<std::size_t>(std::countr_zero(b))] & s) == 0;
    }
    if (independent) best = size;
  }
  return best;
}

}  // namespace trifree::testing
