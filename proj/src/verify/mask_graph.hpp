#pragma once
// Word-level helpers shared by the verification suites. All graphs here have
// order <= 64; subgraphs are vertex masks over the original rows.

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trifree/graph.hpp"
#include "trifree/kernels.hpp"
#include "trifree/solvers.hpp"

namespace trifree::verify_detail {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }
inline int count(Mask m) { return std::popcount(m); }

template <class F>
void for_each_bit(Mask m, F&& f) {
  for (; m != 0; m &= m - 1) f(std::countr_zero(m));
}

/// Visits every size-r submask of `universe` (Gosper's hack over positions).
template <class F>
void for_each_submask_of_size(Mask universe, int r, F&& f) {
  std::vector<int> pos;
  for_each_bit(universe, [&](int v) { pos.push_back(v); });
  const int m = static_cast<int>(pos.size());
  if (r < 0 || r > m) return;
  if (r == 0) {
    f(Mask{0});
    return;
  }
  // Universes here are proper vertex subsets of small graphs, so m < 64.
  std::uint64_t sel = (std::uint64_t{1} << r) - 1;
  const std::uint64_t end = std::uint64_t{1} << m;
  while (sel < end) {
    Mask s = 0;
    for_each_bit(sel, [&](int i) { s |= bit(pos[static_cast<std::size_t>(i)]); });
    f(s);
    const std::uint64_t low = sel & -sel;
    const std::uint64_t ripple = sel + low;
    sel = (((ripple ^ sel) >> 2) / low) | ripple;
  }
}

struct MaskGraph {
  explicit MaskGraph(const Graph& g) : rows(g.word_rows()), n(g.order()), all(kernels::full_mask(g.order())) {}

  std::span<const std::uint64_t> rows;
  int n;
  Mask all;

  Mask nbhd(int v) const { return rows[static_cast<std::size_t>(v)]; }
  Mask closed(int v) const { return nbhd(v) | bit(v); }
  Mask closed(Mask s) const {
    Mask out = s;
    for_each_bit(s, [&](int v) { out |= nbhd(v); });
    return out;
  }
  /// Vertices at distance exactly 2 from v.
  Mask second(int v) const {
    Mask out = 0;
    for_each_bit(nbhd(v), [&](int w) { out |= nbhd(w); });
    return out & ~closed(v);
  }
  int alpha(Mask m) const { return m == 0 ? 0 : independence_number_of_mask(rows, m); }
  int degree_in(int v, Mask m) const { return count(nbhd(v) & m); }
  int edges(Mask m) const {
    int twice = 0;
    for_each_bit(m, [&](int v) { twice += degree_in(v, m); });
    return twice / 2;
  }
  std::int64_t c4(Mask m) const { return m == 0 ? 0 : kernels::count_c4(rows, m); }
  /// ν of the subgraph induced on m; 0 for the empty graph.
  std::int64_t nu(Mask m) const {
    if (m == 0) return 0;
    return 3LL * edges(m) - 17LL * count(m) + 35LL * alpha(m) + c4(m);
  }
  /// Whether s ⊆ m destabilises G[m]. s = m counts as destabilising when m
  /// is non-empty (the empty graph has α = 0).
  bool destabilises(Mask m, Mask s) const { return alpha(m & ~s) < alpha(m); }
  bool destabilises(Mask m, Mask s, int alpha_m) const { return alpha(m & ~s) < alpha_m; }
  bool redundant(Mask m, int alpha_m, int u, int v) const {
    return alpha(m & ~(closed(u) | closed(v))) < alpha_m - 1;
  }
  bool connected(Mask m) const {
    if (m == 0) return true;
    Mask seen = m & -m;
    Mask frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for_each_bit(frontier, [&](int v) { next |= nbhd(v); });
      frontier = next & m & ~seen;
      seen |= frontier;
    }
    return seen == m;
  }
  std::vector<Mask> components(Mask m) const {
    std::vector<Mask> out;
    while (m != 0) {
      Mask seen = m & -m;
      Mask frontier = seen;
      while (frontier != 0) {
        Mask next = 0;
        for_each_bit(frontier, [&](int v) { next |= nbhd(v); });
        frontier = next & m & ~seen;
        seen |= frontier;
      }
      out.push_back(seen);
      m &= ~seen;
    }
    return out;
  }
};

std::string describe(Mask s);

}  // namespace trifree::verify_detail
