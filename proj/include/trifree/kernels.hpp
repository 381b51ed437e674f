#pragma once

// Data-parallel bit-row kernels for graphs of order <= 64.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant. The active variant is chosen once at first use from the CPU
// features; TRIFREE_SIMD=scalar forces the reference path. Both variants are
// kept callable side by side so tests can compare them directly.
//
// Rows are adjacency words (bit j of rows[i] set iff i~j). `mask` restricts
// every kernel to the subgraph induced on the masked vertices.

#include <cstdint>
#include <span>
#include <string_view>

namespace trifree::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

struct KernelTable {
  // out[v] = |N(v) & mask| for v in mask, 0 otherwise.
  void (*degrees)(const std::uint64_t* rows, int n, std::uint64_t mask, int* out);
  // Sum over unordered pairs {u,v} in mask of C(|N(u) & N(v) & mask|, 2);
  // each 4-cycle is counted twice (once per diagonal).
  std::int64_t (*common_pair_sum)(const std::uint64_t* rows, int n, std::uint64_t mask);
  // out[v] = sum over x in mask, x != v, of C(|N(v) & N(x) & mask|, 2),
  // i.e. the number of 4-cycles through v inside mask.
  void (*c4_through)(const std::uint64_t* rows, int n, std::uint64_t mask, std::int64_t* out);
  // Sum over ordered adjacent pairs (u,v) in mask of |N(u) & N(v) & mask|;
  // each triangle is counted six times.
  std::int64_t (*triangle_walks)(const std::uint64_t* rows, int n, std::uint64_t mask);
};

bool available(Isa isa);
const KernelTable& table(Isa isa);
Isa active();
const KernelTable& active_table();

inline std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Convenience wrappers over the active table.
void degrees(std::span<const std::uint64_t> rows, std::span<int> out, std::uint64_t mask = ~std::uint64_t{0});
std::int64_t count_c4(std::span<const std::uint64_t> rows, std::uint64_t mask = ~std::uint64_t{0});
void c4_through(std::span<const std::uint64_t> rows, std::span<std::int64_t> out,
                std::uint64_t mask = ~std::uint64_t{0});
std::int64_t count_triangles(std::span<const std::uint64_t> rows, std::uint64_t mask = ~std::uint64_t{0});

}  // namespace trifree::kernels
