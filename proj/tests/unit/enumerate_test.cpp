#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "test_support.hpp"
#include "trifree/canonical.hpp"
#include "trifree/enumerate.hpp"

namespace trifree {
namespace {

std::multiset<std::string> certificates(const std::vector<Graph>& graphs) {
  std::multiset<std::string> out;
  for (const Graph& g : graphs) out.insert(certificate(g));
  return out;
}

TEST(Enumerate, SmallExamples) {
  const auto k1 = enumerate_all({1, true, 4, std::nullopt});
  ASSERT_EQ(k1.size(), 1u);
  EXPECT_EQ(k1[0].order(), 1);

  const auto five = enumerate_all({5, true, 4, std::nullopt});
  EXPECT_EQ(five.size(), 6u);
  const auto c5 = certificate(testing::cycle_graph(5));
  const auto star = certificate(Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
  EXPECT_EQ(certificates(five).count(c5), 1u);
  EXPECT_EQ(certificates(five).count(star), 1u);

  const auto p3 = naive_enumerate({3, true, 4, std::nullopt});
  ASSERT_EQ(p3.size(), 1u);
  EXPECT_TRUE(is_isomorphic(p3[0], testing::path_graph(3)));

  const auto four = certificates(naive_enumerate({4, false, 4, std::nullopt}));
  EXPECT_EQ(four.size(), 7u);
  for (const Graph& g : {testing::cycle_graph(4), testing::path_graph(4), Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}),
                         Graph::from_edges(4, std::initializer_list<Edge>{})}) {
    EXPECT_EQ(four.count(certificate(g)), 1u);
  }
}

TEST(Enumerate, MatchesNaiveOracle) {
  for (int n = 1; n <= 7; ++n) {
    for (bool connected : {false, true}) {
      for (int girth : {4, 5}) {
        const EnumerationSpec spec{n, connected, girth, std::nullopt};
        EXPECT_EQ(certificates(enumerate_all(spec)), certificates(naive_enumerate(spec)))
            << "n=" << n << " connected=" << connected << " girth=" << girth;
      }
    }
  }
}

TEST(Enumerate, KnownClassCounts) {
  const std::vector<std::int64_t> connected = {1, 1, 1, 3, 6, 19, 59, 267, 1380, 9832};
  const std::vector<std::int64_t> all = {1, 2, 3, 7, 14, 38, 107, 410, 1897, 12172};
  const std::vector<std::int64_t> connected_girth5 = {1, 1, 1, 2, 4, 8, 18, 47, 137, 464};
  for (int n = 1; n <= 10; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    EXPECT_EQ(count_classes({n, true, 4, std::nullopt}), connected[i]) << n;
    EXPECT_EQ(count_classes({n, false, 4, std::nullopt}), all[i]) << n;
    EXPECT_EQ(count_classes({n, true, 5, std::nullopt}), connected_girth5[i]) << n;
  }
}

TEST(Enumerate, OutputsAreDistinctAndSatisfyTheSpec) {
  for (int girth : {4, 5}) {
    const EnumerationSpec spec{8, true, girth, std::nullopt};
    const auto graphs = enumerate_all(spec);
    const auto certs = certificates(graphs);
    EXPECT_EQ(std::set<std::string>(certs.begin(), certs.end()).size(), graphs.size());
    for (const Graph& g : graphs) {
      EXPECT_EQ(g.order(), 8);
      EXPECT_TRUE(is_connected(g));
      EXPECT_TRUE(is_short_cycle_avoiding(g, girth - 1));
    }
  }
}

TEST(Enumerate, PartitionsCoverEverythingOnce) {
  const EnumerationSpec spec{9, false, 4, std::nullopt};
  const auto whole = certificates(enumerate_all(spec));
  for (int parts = 1; parts <= 16; ++parts) {
    std::multiset<std::string> merged;
    for (int p = 0; p < parts; ++p) enumerate_partition(spec, p, parts, [&](const Graph& g) { merged.insert(certificate(g)); });
    EXPECT_EQ(merged, whole) << parts << " parts";
  }
}

TEST(Enumerate, ParallelRunMatchesSerialOrder) {
  const Enumerator en({9, true, 4, std::nullopt});
  using Acc = std::vector<std::string>;
  auto collect = [](Acc& acc, const Graph& g) { acc.push_back(certificate(g)); };
  EXPECT_EQ(run_items(en, 1, Acc{}, collect), run_items(en, 4, Acc{}, collect));
}

TEST(Enumerate, DegreeCapMatchesFilter) {
  for (int cap : {2, 3, 4}) {
    const auto capped = certificates(enumerate_all({9, true, 4, cap}));
    std::multiset<std::string> filtered;
    for (const Graph& g : enumerate_all({9, true, 4, std::nullopt})) {
      if (g.max_degree() <= cap) filtered.insert(certificate(g));
    }
    EXPECT_EQ(capped, filtered) << "cap " << cap;
  }
  EXPECT_EQ(certificates(enumerate_all({7, false, 5, 2})), certificates(naive_enumerate({7, false, 5, 2})));
}

TEST(Enumerate, OrderCap) {
  EXPECT_THROW(Enumerator({15, true, 4, std::nullopt}), GraphError);
  EXPECT_THROW(Enumerator({5, true, 3, std::nullopt}), GraphError);
  EXPECT_THROW(naive_enumerate({8, true, 4, std::nullopt}), GraphError);
  ::setenv("TRIFREE_CAP", "6", 1);
  EXPECT_EQ(enumeration_cap(), 6);
  EXPECT_THROW(Enumerator({7, true, 4, std::nullopt}), GraphError);
  ::setenv("TRIFREE_CAP", "40", 1);
  EXPECT_EQ(enumeration_cap(), kEnumerationHardCap);
  ::unsetenv("TRIFREE_CAP");
}

}  // namespace
}  // namespace trifree
