#include "kernels_impl.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define TRIFREE_HAVE_AVX2_TU 1
#else
#define TRIFREE_HAVE_AVX2_TU 0
#endif

#include <array>
#include <bit>

namespace trifree::kernels::detail {

#if TRIFREE_HAVE_AVX2_TU

namespace {

#define TRIFREE_AVX2 __attribute__((target("avx2")))

// Rows restricted to mask, zero-padded to a multiple of four lanes.
struct MaskedRows {
  alignas(32) std::array<std::uint64_t, 68> words{};
  int blocks = 0;
};

inline MaskedRows load_masked(const std::uint64_t* rows, int n, std::uint64_t mask) {
  MaskedRows m;
  for (int v = 0; v < n; ++v) m.words[static_cast<std::size_t>(v)] = (mask >> v) & 1U ? rows[v] & mask : 0;
  m.blocks = (n + 3) / 4;
  return m;
}

// Per-lane popcount of four 64-bit words (nibble lookup + horizontal byte sum).
TRIFREE_AVX2 inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

// C(c,2) per lane; c <= 64 so the 32x32 multiply is exact.
TRIFREE_AVX2 inline __m256i choose2_epi64(__m256i c) {
  const __m256i cm1 = _mm256_sub_epi64(c, _mm256_set1_epi64x(1));
  const __m256i prod = _mm256_mul_epu32(c, _mm256_max_epi32(cm1, _mm256_setzero_si256()));
  return _mm256_srli_epi64(prod, 1);
}

TRIFREE_AVX2 inline std::int64_t hsum_epi64(__m256i v) {
  alignas(32) std::array<std::int64_t, 4> lanes{};
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

TRIFREE_AVX2 void degrees(const std::uint64_t* rows, int n, std::uint64_t mask, int* out) {
  const MaskedRows m = load_masked(rows, n, mask);
  alignas(32) std::array<std::int64_t, 4> lanes{};
  for (int b = 0; b < m.blocks; ++b) {
    const __m256i r = _mm256_load_si256(reinterpret_cast<const __m256i*>(m.words.data() + 4 * b));
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), popcount_epi64(r));
    for (int l = 0; l < 4 && 4 * b + l < n; ++l) out[4 * b + l] = static_cast<int>(lanes[static_cast<std::size_t>(l)]);
  }
}

TRIFREE_AVX2 std::int64_t common_pair_sum(const std::uint64_t* rows, int n, std::uint64_t mask) {
  const MaskedRows m = load_masked(rows, n, mask);
  __m256i acc = _mm256_setzero_si256();
  for (int u = 0; u < n; ++u) {
    const std::uint64_t ru = m.words[static_cast<std::size_t>(u)];
    if (ru == 0) continue;
    const __m256i bu = _mm256_set1_epi64x(static_cast<long long>(ru));
    // Lanes v <= u inside the first block are masked off.
    const int first = u + 1;
    for (int v = first; v < n; v += 4) {
      const __m256i rv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(m.words.data() + v));
      acc = _mm256_add_epi64(acc, choose2_epi64(popcount_epi64(_mm256_and_si256(bu, rv))));
    }
  }
  return hsum_epi64(acc);
}

TRIFREE_AVX2 void c4_through(const std::uint64_t* rows, int n, std::uint64_t mask, std::int64_t* out) {
  const MaskedRows m = load_masked(rows, n, mask);
  for (int v = 0; v < n; ++v) {
    out[v] = 0;
    if (!((mask >> v) & 1U)) continue;
    const std::uint64_t rv = m.words[static_cast<std::size_t>(v)];
    const __m256i bv = _mm256_set1_epi64x(static_cast<long long>(rv));
    __m256i acc = _mm256_setzero_si256();
    for (int b = 0; b < m.blocks; ++b) {
      const __m256i rx = _mm256_load_si256(reinterpret_cast<const __m256i*>(m.words.data() + 4 * b));
      acc = _mm256_add_epi64(acc, choose2_epi64(popcount_epi64(_mm256_and_si256(bv, rx))));
    }
    // Remove the x == v term, C(deg(v), 2).
    const std::int64_t d = std::popcount(rv);
    out[v] = hsum_epi64(acc) - d * (d - 1) / 2;
  }
}

TRIFREE_AVX2 std::int64_t triangle_walks(const std::uint64_t* rows, int n, std::uint64_t mask) {
  const MaskedRows m = load_masked(rows, n, mask);
  __m256i acc = _mm256_setzero_si256();
  const __m256i lane_bits = _mm256_setr_epi64x(1, 2, 4, 8);
  for (int u = 0; u < n; ++u) {
    const std::uint64_t ru = m.words[static_cast<std::size_t>(u)];
    if (ru == 0) continue;
    const __m256i bu = _mm256_set1_epi64x(static_cast<long long>(ru));
    for (int b = 0; b < m.blocks; ++b) {
      const std::uint64_t nibble = (ru >> (4 * b)) & 0xF;
      if (nibble == 0) continue;
      const __m256i sel = _mm256_cmpeq_epi64(
          _mm256_and_si256(_mm256_set1_epi64x(static_cast<long long>(nibble)), lane_bits), lane_bits);
      const __m256i rx = _mm256_load_si256(reinterpret_cast<const __m256i*>(m.words.data() + 4 * b));
      acc = _mm256_add_epi64(acc, _mm256_and_si256(sel, popcount_epi64(_mm256_and_si256(bu, rx))));
    }
  }
  return hsum_epi64(acc);
}

#undef TRIFREE_AVX2

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{degrees, common_pair_sum, c4_through, triangle_walks};
  return table;
}

bool avx2_compiled() { return true; }

#else

const KernelTable& avx2_table() { return scalar_table(); }
bool avx2_compiled() { return false; }

#endif

}  // namespace trifree::kernels::detail
