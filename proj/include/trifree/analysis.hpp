#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "trifree/graph.hpp"

namespace trifree {

struct InvariantRecord {
  std::string name;
  int n = 0;
  int e = 0;
  int alpha = 0;
  std::int64_t c3 = 0;
  std::int64_t c4 = 0;
  std::int64_t c5 = 0;
  std::int64_t nu = 0;
  std::int64_t t = 0;
  int min_degree = 0;
  int max_degree = 0;
  std::optional<int> girth;  // nullopt: acyclic
  bool edge_critical = false;

  bool triangle_free() const { return c3 == 0; }
};

/// ν = 3e − 17n + 35α + N(C4).
std::int64_t nu_value(int n, int e, int alpha, std::int64_t c4);
/// t = e − 6n + 13α.
std::int64_t t_value(int n, int e, int alpha);

/// All fields computed exactly. ν and t are evaluated for any simple graph;
/// c3 tells whether the non-negativity guarantees apply.
InvariantRecord invariants(const Graph& g);
/// ν alone (α by branch and bound, N(C4) by the bit-row kernel when n <= 64).
std::int64_t nu(const Graph& g);

std::string csv_header();
std::string to_csv(const InvariantRecord& r);
nlohmann::ordered_json to_json(const InvariantRecord& r);

// Edge criticality. An edge uv is redundant iff α(G − uv) = α(G), which
// happens iff no independent set of size α − 1 avoids N[u] ∪ N[v].
bool is_redundant_edge(const Graph& g, int u, int v);
std::vector<Edge> redundant_edges(const Graph& g);
std::vector<Edge> critical_edges(const Graph& g);
bool is_edge_critical(const Graph& g);

/// α(G \ S) < α(G). S must be a proper subset of V.
bool destabilises(const Graph& g, const VertexSet& s);

struct Destabiliser {
  VertexSet set;
  bool connected = false;  // G[S] connected
};

struct DestabiliserReport {
  int alpha = 0;
  int max_size = 0;
  /// Inclusion-minimal destabilisers of size <= max_size, by size then
  /// lexicographic member order.
  std::vector<Destabiliser> minimal_sets;
  int r_stable_up_to = 0;
};

DestabiliserReport minimal_destabilisers(const Graph& g, int max_size);
/// No destabiliser of size <= r. Destabilising is inherited by proper
/// supersets, so only sets of size exactly r need checking.
bool is_r_stable(const Graph& g, int r);

struct RemovalBound {
  std::int64_t lhs = 0;  // ν(G_v)
  std::int64_t rhs = 0;  // ν(G) − 3d²(v) + 17d(v) − 18 − N(C4; G, N(v))
  bool holds = false;
};

/// Both sides of the removal-count bound for a triangle-free G; throws
/// GraphVanished when N[v] = V.
RemovalBound removal_count_bound(const Graph& g, int v);

/// Whether N_2(v) destabilises G_v, for connected, edge-critical,
/// triangle-free G with d(v) >= 2 (Precondition error otherwise). When
/// N_2(v) is all of G_v the answer is true, since α of the empty graph is 0.
bool check_second_nbhd_destabilises(const Graph& g, int v);

}  // namespace trifree
