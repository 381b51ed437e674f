#include <algorithm>

#include "trifree/analysis.hpp"
#include "trifree/kernels.hpp"
#include "trifree/solvers.hpp"

namespace trifree {

namespace {

// α restricted to the vertices outside `removed`, on either representation.
int alpha_without(const Graph& g, const VertexSet& removed) {
  if (g.fits_word()) return independence_number_of_mask(g.word_rows(), kernels::full_mask(g.order()) & ~removed.word());
  return max_independent_avoiding(g, removed);
}

bool redundant_given_alpha(const Graph& g, int alpha, int u, int v) {
  VertexSet blocked = g.neighborhood(u) | g.neighborhood(v);
  blocked.insert(u);
  blocked.insert(v);
  return alpha_without(g, blocked) < alpha - 1;
}

// Visits all size-r subsets of 0..n-1 in lexicographic order; stops early
// when f returns false.
template <class F>
bool for_each_subset(int n, int r, F&& f) {
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (r > n) return true;
  while (true) {
    if (!f(std::span<const int>(idx))) return false;
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

bool is_redundant_edge(const Graph& g, int u, int v) {
  if (!g.adjacent(u, v)) throw GraphError(ErrorCode::MissingEdge, "not an edge");
  return redundant_given_alpha(g, independence_number(g).alpha, u, v);
}

std::vector<Edge> redundant_edges(const Graph& g) {
  const int alpha = independence_number(g).alpha;
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (redundant_given_alpha(g, alpha, e.u, e.v)) out.push_back(e);
  }
  return out;
}

std::vector<Edge> critical_edges(const Graph& g) {
  const int alpha = independence_number(g).alpha;
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (!redundant_given_alpha(g, alpha, e.u, e.v)) out.push_back(e);
  }
  return out;
}

bool is_edge_critical(const Graph& g) {
  const int alpha = independence_number(g).alpha;
  for (const Edge& e : g.edges()) {
    if (redundant_given_alpha(g, alpha, e.u, e.v)) return false;
  }
  return true;
}

bool destabilises(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw GraphError(ErrorCode::InvalidArgument, "vertex set does not match graph order");
  if (s.size() == g.order()) throw GraphError(ErrorCode::Precondition, "a destabiliser must be a proper subset of V");
  if (s.empty()) return false;
  return alpha_without(g, s) < independence_number(g).alpha;
}

DestabiliserReport minimal_destabilisers(const Graph& g, int max_size) {
  const int n = g.order();
  if (max_size < 0 || max_size > n - 1) throw GraphError(ErrorCode::InvalidArgument, "max_size must be in 0..n-1");
  DestabiliserReport report;
  report.alpha = independence_number(g).alpha;
  report.max_size = max_size;
  report.r_stable_up_to = max_size;
  for (int r = 1; r <= max_size; ++r) {
    const std::size_t found_before = report.minimal_sets.size();
    for_each_subset(n, r, [&](std::span<const int> members) {
      const VertexSet s(n, members);
      // Sets found in earlier rounds are smaller; containing one means not minimal.
      for (std::size_t i = 0; i < found_before; ++i) {
        if (report.minimal_sets[i].set.is_subset_of(s)) return true;
      }
      if (alpha_without(g, s) < report.alpha) {
        report.minimal_sets.push_back({s, is_connected(induced(g, s).graph)});
      }
      return true;
    });
    if (report.minimal_sets.size() > 0 && found_before == 0) report.r_stable_up_to = r - 1;
  }
  return report;
}

bool is_r_stable(const Graph& g, int r) {
  const int n = g.order();
  if (r < 0 || r > n - 1) throw GraphError(ErrorCode::InvalidArgument, "r must be in 0..n-1");
  if (r == 0) return true;
  const int alpha = independence_number(g).alpha;
  return for_each_subset(n, r, [&](std::span<const int> members) { return alpha_without(g, VertexSet(n, members)) >= alpha; });
}

RemovalBound removal_count_bound(const Graph& g, int v) {
  const Subgraph gv = reduce_closed(g, v);
  const std::int64_t d = g.degree(v);
  const std::int64_t d2 = g.second_valency(v);
  const std::int64_t c4_at_nbrs = count_cycles_through(g, 4, g.neighborhood(v));
  RemovalBound out;
  out.lhs = nu(gv.graph);
  out.rhs = nu(g) - 3 * d2 + 17 * d - 18 - c4_at_nbrs;
  out.holds = out.lhs <= out.rhs;
  return out;
}

bool check_second_nbhd_destabilises(const Graph& g, int v) {
  if (g.degree(v) < 2) throw GraphError(ErrorCode::Precondition, "vertex degree below 2");
  if (!is_triangle_free(g)) throw GraphError(ErrorCode::Precondition, "graph has a triangle");
  if (!is_connected(g)) throw GraphError(ErrorCode::Precondition, "graph is disconnected");
  if (!is_edge_critical(g)) throw GraphError(ErrorCode::Precondition, "graph is not edge-critical");
  const Subgraph gv = reduce_closed(g, v);
  const VertexSet s = gv.translate(vertices_at_distance(g, v, 2));
  if (s.size() == gv.graph.order()) return true;
  return destabilises(gv.graph, s);
}

}  // namespace trifree
