#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "trifree/families.hpp"
#include "trifree/kernels.hpp"
#include "trifree/solvers.hpp"

namespace trifree {
namespace {

bool independent(const Graph& g, const VertexSet& s) {
  const auto m = s.members();
  for (int u : m) {
    for (int v : m) {
      if (g.adjacent(u, v)) return false;
    }
  }
  return true;
}

TEST(Independence, FamilyValues) {
  for (int k = 2; k <= 8; ++k) EXPECT_EQ(independence_number(chain(k)).alpha, k) << "Ch_" << k;
  EXPECT_EQ(independence_number(bicycle(5)).alpha, 5);
  EXPECT_EQ(independence_number(gp72()).alpha, 5);
  EXPECT_EQ(independence_number(testing::cycle_graph(5)).alpha, 2);
}

TEST(Independence, WitnessIsMaximumIndependentSet) {
  for (const Graph& g : {chain(6), bicycle(7), shackled_chain(4), w5(), testing::cycle_graph(300)}) {
    const IndependenceResult r = independence_number(g);
    EXPECT_TRUE(independent(g, r.witness));
    EXPECT_EQ(r.witness.size(), r.alpha);
    EXPECT_GT(r.node_count, 0);
  }
  EXPECT_EQ(independence_number(testing::cycle_graph(300)).alpha, 150);
}

TEST(Independence, MatchesBruteForce) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + t % 16;
    const Graph g = testing::random_graph(n, 0.1 + 0.1 * (t % 7), t % 2 == 0, rng);
    EXPECT_EQ(independence_number(g).alpha, testing::brute_force_alpha(g)) << "n=" << n;
  }
  for (const Graph& g : {chain(5), bicycle(5), shackled_chain(2), w5(), gp72(), s1(), s2()}) {
    EXPECT_EQ(independence_number(g).alpha, testing::brute_force_alpha(g)) << g.label();
  }
}

TEST(Independence, Deterministic) {
  const Graph g = bicycle(8);
  EXPECT_EQ(independence_number(g).witness, independence_number(g).witness);
}

TEST(Independence, AvoidingSets) {
  const Graph c5 = testing::cycle_graph(5);
  EXPECT_EQ(max_independent_avoiding(c5, VertexSet(5, {4, 0, 1})), 1);
  EXPECT_EQ(max_independent_avoiding(c5, VertexSet(5, {0, 1})), 2);
  EXPECT_EQ(max_independent_avoiding(c5, VertexSet(5)), 2);
  EXPECT_EQ(max_independent_avoiding(c5, VertexSet::full(5)), 0);
  const Graph g = chain(5);
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet s(g.order(), {v});
    EXPECT_EQ(max_independent_avoiding(g, s), independence_number(delete_vertices(g, s).graph).alpha);
  }
}

TEST(Cycles, FamilyCounts) {
  EXPECT_EQ(count_cycles(chain(4), 4).total, 2);
  EXPECT_EQ(count_cycles(bicycle(5), 4).total, 5);
  EXPECT_EQ(count_cycles(bicycle(4), 4).total, 5);
  EXPECT_EQ(count_cycles(testing::cycle_graph(4), 4).total, 1);
  EXPECT_EQ(count_cycles(gp72(), 4).total, 0);
  EXPECT_EQ(count_cycles(gp72(), 3).total, 0);
  EXPECT_EQ(count_cycles(testing::cycle_graph(8), 8).total, 1);
}

TEST(Cycles, CompleteGraphCounts) {
  // K_n has n!/(2k(n−k)!) cycles of length k.
  std::vector<Edge> edges;
  for (int u = 0; u < 7; ++u) {
    for (int v = u + 1; v < 7; ++v) edges.push_back({u, v});
  }
  const Graph k7 = Graph::from_edges(7, edges);
  EXPECT_EQ(count_cycles(k7, 3).total, 35);
  EXPECT_EQ(count_cycles(k7, 4).total, 105);
  EXPECT_EQ(count_cycles(k7, 5).total, 252);
  EXPECT_EQ(count_cycles(k7, 6).total, 420);
  EXPECT_EQ(count_cycles(k7, 7).total, 360);
}

TEST(Cycles, ThroughCountsAndInvariance) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 40; ++t) {
    const Graph g = testing::random_graph(11, 0.35, t % 2 == 0, rng);
    const Graph h = testing::random_permutation_of(g, rng);
    for (int k = kMinCycleLength; k <= kMaxCycleLength; ++k) {
      const CycleCount c = count_cycles(g, k);
      std::int64_t sum = 0;
      for (auto x : c.through) sum += x;
      EXPECT_EQ(sum, k * c.total);
      EXPECT_EQ(count_cycles(h, k).total, c.total);
    }
    EXPECT_EQ(count_cycles(g, 4).total, kernels::count_c4(g.word_rows()));
  }
}

TEST(Cycles, ThroughSets) {
  const Graph c4 = testing::cycle_graph(4);
  EXPECT_EQ(count_cycles_through(c4, 4, VertexSet(4, {2})), 1);
  const Graph ch4 = chain(4);
  EXPECT_EQ(count_cycles_through(ch4, 4, VertexSet::full(ch4.order())), 2);
  bool saw_d2_five = false;
  for (int v : bivalent_vertices(ch4)) {
    if (ch4.second_valency(v) != 5) continue;
    saw_d2_five = true;
    EXPECT_EQ(count_cycles_through(ch4, 4, VertexSet(ch4.order(), {v})), 0);
  }
  EXPECT_TRUE(saw_d2_five);
  EXPECT_THROW(count_cycles(c4, 9), GraphError);
  EXPECT_THROW(count_cycles_through(c4, 2, VertexSet(4)), GraphError);
}

TEST(Cycles, VisitorReportsEachCycleOnce) {
  const Graph g = bicycle(5);
  int visits = 0;
  for_each_cycle(g, 5, [&](std::span<const int> cycle) {
    ++visits;
    EXPECT_EQ(cycle.size(), 5u);
    for (std::size_t i = 0; i < cycle.size(); ++i) EXPECT_TRUE(g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()]));
  });
  EXPECT_EQ(visits, count_cycles(g, 5).total);
}

TEST(SecondEdgeCount, Values) {
  EXPECT_EQ(e2_half_sum(testing::cycle_graph(5)), 10);
  EXPECT_EQ(e2_twice(testing::cycle_graph(5)), 20);
  EXPECT_EQ(e2_half_sum(Graph::from_edges(2, {{0, 1}})), 1);
  EXPECT_EQ(e2_half_sum(chain(3)), 26);
}

std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

// Right-hand side of the one-vertex e² reduction identity without its
// 4-cycle term.
std::int64_t e2_rhs_without_cycles(const Graph& g, int v) {
  std::int64_t rhs = 0;
  for (int w : g.neighbors(v)) rhs += g.second_valency(w) + choose2(g.degree(w));
  return rhs - choose2(g.degree(v));
}

TEST(SecondEdgeCount, ReductionIdentity) {
  std::mt19937_64 rng(23);
  std::vector<Graph> corpus = {chain(4), bicycle(5), shackled_chain(3), w5(), gp72(), s2()};
  for (int t = 0; t < 200; ++t) corpus.push_back(testing::random_graph(3 + t % 12, 0.4, true, rng));
  for (const Graph& g : corpus) {
    for (int v = 0; v < g.order(); ++v) {
      if (closed_neighborhood(g, v).size() == g.order()) continue;
      const Graph gv = reduce_closed(g, v).graph;
      const std::int64_t c4_at_v = count_cycles_through(g, 4, VertexSet(g.order(), {v}));
      EXPECT_EQ(e2_half_sum(g) - e2_half_sum(gv), e2_rhs_without_cycles(g, v) - c4_at_v);
    }
  }
}

TEST(SecondEdgeCount, PrintedCycleTermFailsOnFourCycle) {
  // Subtracting N(C4;G) − N(C4;G,v) instead of N(C4;G,v) is off by one on C4.
  const Graph c4 = testing::cycle_graph(4);
  const Graph gv = reduce_closed(c4, 0).graph;
  const std::int64_t lhs = e2_half_sum(c4) - e2_half_sum(gv);
  const std::int64_t printed = e2_rhs_without_cycles(c4, 0) - (count_cycles(c4, 4).total - count_cycles_through(c4, 4, VertexSet(4, {0})));
  EXPECT_EQ(lhs, 8);
  EXPECT_EQ(printed, 9);
}

}  // namespace
}  // namespace trifree
