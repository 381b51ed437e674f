#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "test_support.hpp"
#include "trifree/canonical.hpp"

namespace trifree {
namespace {

// Isomorphism-class key by trying every permutation: the lexicographically
// largest upper-triangle bit string.
std::vector<bool> permutation_oracle(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> bits;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) bits.push_back(g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]));
    }
    best = std::max(best, bits);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

TEST(Canonical, RelabelledCyclesShareCertificate) {
  std::mt19937_64 rng(1);
  const Graph c5 = testing::cycle_graph(5);
  const auto cert = certificate(c5);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(certificate(testing::random_permutation_of(c5, rng)), cert);
  EXPECT_NE(certificate(testing::path_graph(5)), cert);
}

TEST(Canonical, LabelingReproducesCanonicalGraph) {
  std::mt19937_64 rng(2);
  for (int n : {1, 2, 7, 12, 20, 40, 64}) {
    for (int t = 0; t < 5; ++t) {
      const Graph g = testing::random_graph(n, 0.25, t % 2 == 0, rng);
      const CanonicalForm form = canonical_form(g);
      EXPECT_EQ(permute(g, form.labeling), form.canonical_graph);
      for (int i = 0; i < 20; ++i) {
        const Graph h = testing::random_permutation_of(g, rng);
        const CanonicalForm other = canonical_form(h);
        EXPECT_EQ(other.certificate, form.certificate);
        EXPECT_EQ(other.canonical_graph, form.canonical_graph);
      }
    }
  }
}

TEST(Canonical, AgreesWithPermutationOracle) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 8; ++n) {
    std::vector<Graph> sample;
    for (int t = 0; t < (n <= 6 ? 150 : 40); ++t) {
      sample.push_back(testing::random_graph(n, 0.2 + 0.1 * (t % 5), t % 3 == 0, rng));
    }
    std::map<std::vector<bool>, std::string> cert_of_class;
    std::set<std::string> seen;
    for (const Graph& g : sample) {
      const auto key = permutation_oracle(g);
      const auto cert = certificate(g);
      auto [it, inserted] = cert_of_class.emplace(key, cert);
      EXPECT_EQ(it->second, cert) << "isomorphic graphs with different certificates, n=" << n;
      if (inserted) EXPECT_TRUE(seen.insert(cert).second) << "non-isomorphic graphs share a certificate, n=" << n;
    }
  }
}

TEST(Canonical, HighlySymmetricGraphs) {
  std::mt19937_64 rng(4);
  std::vector<Graph> graphs;
  graphs.push_back(Graph::from_edges(64, std::initializer_list<Edge>{}));
  std::vector<Edge> k_half;
  for (int i = 0; i < 32; ++i) {
    for (int j = 32; j < 64; ++j) k_half.push_back({i, j});
  }
  graphs.push_back(Graph::from_edges(64, k_half));
  std::vector<Edge> cube;
  for (int v = 0; v < 64; ++v) {
    for (int b = 0; b < 6; ++b) {
      if (v < (v ^ (1 << b))) cube.push_back({v, v ^ (1 << b)});
    }
  }
  graphs.push_back(Graph::from_edges(64, cube));
  graphs.push_back(testing::cycle_graph(64));
  for (const Graph& g : graphs) {
    const auto cert = certificate(g);
    for (int i = 0; i < 5; ++i) EXPECT_EQ(certificate(testing::random_permutation_of(g, rng)), cert);
  }
  EXPECT_FALSE(is_isomorphic(graphs[2], graphs[3]));
}

TEST(Canonical, DistinguishesCospectralPair) {
  // C4 + K1 and the star K_{1,4} share a spectrum but are not isomorphic.
  const Graph c4k1 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_FALSE(is_isomorphic(c4k1, star));
}

}  // namespace
}  // namespace trifree
