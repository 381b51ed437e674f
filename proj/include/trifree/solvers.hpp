#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "trifree/graph.hpp"

namespace trifree {

struct IndependenceResult {
  int alpha = 0;
  VertexSet witness;
  /// Search-tree nodes expanded; diagnostic only.
  std::int64_t node_count = 0;
};

/// Exact independence number with a maximum independent set.
///
/// Branch and bound: vertices of degree <= 1 are taken greedily, the search
/// branches on a maximum-degree vertex (include it and drop N[v], or drop
/// it), and prunes with a greedy clique-cover bound. Ties go to the lowest
/// index, so the witness is a deterministic function of the labelling.
IndependenceResult independence_number(const Graph& g);

/// Largest independent set disjoint from s (0 when s covers V).
int max_independent_avoiding(const Graph& g, const VertexSet& s);

/// α of the subgraph induced on `mask`, single-word rows (n <= 64).
int independence_number_of_mask(std::span<const std::uint64_t> rows, std::uint64_t mask);

struct CycleCount {
  int length = 0;
  std::int64_t total = 0;
  /// through[v]: number of length-cycles containing v. Sums to length * total.
  std::vector<std::int64_t> through;
};

inline constexpr int kMinCycleLength = 3;
inline constexpr int kMaxCycleLength = 8;

/// Cycles of length k (3 <= k <= 8), each counted once as a subgraph.
CycleCount count_cycles(const Graph& g, int k);
/// Cycles of length k with at least one vertex in s.
std::int64_t count_cycles_through(const Graph& g, int k, const VertexSet& s);
/// Calls visit once per k-cycle with its vertices in cyclic order, starting
/// at the minimum vertex.
void for_each_cycle(const Graph& g, int k, const std::function<void(std::span<const int>)>& visit);

/// Twice e², i.e. the sum of squared degrees.
std::int64_t e2_twice(const Graph& g);
/// e² itself. The squared-degree sum has the parity of the degree sum, so it
/// is always even and the halving is exact.
std::int64_t e2_half_sum(const Graph& g);

}  // namespace trifree
