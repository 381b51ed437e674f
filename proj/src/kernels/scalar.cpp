#include <bit>

#include "kernels_impl.hpp"

namespace trifree::kernels::detail {

namespace {

inline std::int64_t choose2(std::int64_t c) { return c * (c - 1) / 2; }

void degrees(const std::uint64_t* rows, int n, std::uint64_t mask, int* out) {
  for (int v = 0; v < n; ++v) out[v] = (mask >> v) & 1U ? std::popcount(rows[v] & mask) : 0;
}

std::int64_t common_pair_sum(const std::uint64_t* rows, int n, std::uint64_t mask) {
  std::int64_t total = 0;
  for (int u = 0; u < n; ++u) {
    if (!((mask >> u) & 1U)) continue;
    const std::uint64_t ru = rows[u] & mask;
    for (int v = u + 1; v < n; ++v) {
      if (!((mask >> v) & 1U)) continue;
      total += choose2(std::popcount(ru & rows[v]));
    }
  }
  return total;
}

void c4_through(const std::uint64_t* rows, int n, std::uint64_t mask, std::int64_t* out) {
  for (int v = 0; v < n; ++v) {
    out[v] = 0;
    if (!((mask >> v) & 1U)) continue;
    const std::uint64_t rv = rows[v] & mask;
    for (int x = 0; x < n; ++x) {
      if (x == v || !((mask >> x) & 1U)) continue;
      out[v] += choose2(std::popcount(rv & rows[x]));
    }
  }
}

std::int64_t triangle_walks(const std::uint64_t* rows, int n, std::uint64_t mask) {
  std::int64_t total = 0;
  for (int u = 0; u < n; ++u) {
    if (!((mask >> u) & 1U)) continue;
    const std::uint64_t ru = rows[u] & mask;
    for (std::uint64_t b = ru; b; b &= b - 1) {
      total += std::popcount(ru & rows[std::countr_zero(b)]);
    }
  }
  return total;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{degrees, common_pair_sum, c4_through, triangle_walks};
  return table;
}

}  // namespace trifree::kernels::detail
