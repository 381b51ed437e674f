#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "trifree/kernels.hpp"

namespace trifree {
namespace {

// Direct definitions, independent of the kernel layer.
std::int64_t naive_c4(const Graph& g) {
  std::int64_t count = 0;
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = a + 1; c < n; ++c) {
        for (int d = b + 1; d < n; ++d) {
          if (c == b || d == c) continue;
          // a is the minimum; b < d fixes the orientation.
          if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && g.adjacent(d, a)) ++count;
        }
      }
    }
  }
  return count;
}

std::int64_t naive_triangles(const Graph& g) {
  std::int64_t count = 0;
  for (int a = 0; a < g.order(); ++a) {
    for (int b = a + 1; b < g.order(); ++b) {
      for (int c = b + 1; c < g.order(); ++c) count += g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c);
    }
  }
  return count;
}

TEST(Kernels, ScalarMatchesDefinitions) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    const Graph g = testing::random_graph(4 + t % 9, 0.45, false, rng);
    EXPECT_EQ(kernels::count_c4(g.word_rows()), naive_c4(g));
    EXPECT_EQ(kernels::count_triangles(g.word_rows()), naive_triangles(g));
  }
  EXPECT_EQ(kernels::count_c4(testing::cycle_graph(4).word_rows()), 1);
}

TEST(Kernels, Avx2MatchesScalar) {
  if (!kernels::available(kernels::Isa::Avx2)) GTEST_SKIP() << "AVX2 not available on this CPU";
  const auto& scalar = kernels::table(kernels::Isa::Scalar);
  const auto& avx2 = kernels::table(kernels::Isa::Avx2);
  std::mt19937_64 rng(6);
  for (int n = 1; n <= 64; ++n) {
    for (double p : {0.05, 0.2, 0.5, 0.9}) {
      const Graph g = testing::random_graph(n, p, false, rng);
      const auto rows = g.word_rows();
      std::uint64_t mask = kernels::full_mask(n);
      for (int m = 0; m < 2; ++m) {
        std::vector<int> d1(64), d2(64);
        scalar.degrees(rows.data(), n, mask, d1.data());
        avx2.degrees(rows.data(), n, mask, d2.data());
        EXPECT_EQ(d1, d2);
        EXPECT_EQ(scalar.common_pair_sum(rows.data(), n, mask), avx2.common_pair_sum(rows.data(), n, mask));
        EXPECT_EQ(scalar.triangle_walks(rows.data(), n, mask), avx2.triangle_walks(rows.data(), n, mask));
        std::vector<std::int64_t> t1(64), t2(64);
        scalar.c4_through(rows.data(), n, mask, t1.data());
        avx2.c4_through(rows.data(), n, mask, t2.data());
        EXPECT_EQ(t1, t2) << "n=" << n;
        mask &= rng();
      }
    }
  }
}

TEST(Kernels, C4ThroughSumsToFourTimesTotal) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; ++t) {
    const Graph g = testing::random_graph(12, 0.35, true, rng);
    std::vector<std::int64_t> through(12);
    kernels::c4_through(g.word_rows(), through);
    std::int64_t sum = 0;
    for (auto x : through) sum += x;
    EXPECT_EQ(sum, 4 * kernels::count_c4(g.word_rows()));
  }
}

}  // namespace
}  // namespace trifree
