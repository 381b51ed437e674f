#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "test_support.hpp"
#include "trifree/canonical.hpp"
#include "trifree/families.hpp"
#include "trifree/graph6.hpp"
#include "trifree/solvers.hpp"

namespace trifree {
namespace {

// Hand-transcribed drawing of the two smallest shackled chains.
Graph drawn_shackled_chain_1() {
  enum { a1, c, d, b2, b1, f, e, a2, w1, w2, v };
  return Graph::from_edges(11, {{a1, c}, {c, d}, {d, b2}, {b2, b1}, {b1, f}, {f, e}, {e, a2}, {a2, a1},
                                {e, d}, {c, f}, {v, w1}, {v, w2}, {w1, a1}, {w1, b1}, {w2, a2}, {w2, b2}});
}

Graph drawn_shackled_chain_2() {
  enum { oa1, oc, od, ob2, ob1, of, oe, oa2, b1, b2, a, w1, w2, v };
  return Graph::from_edges(14, {{oa1, oc}, {oc, od}, {od, ob2}, {ob2, ob1}, {ob1, of}, {of, oe}, {oe, oa2}, {oa2, oa1},
                                {oe, od}, {oc, of}, {a, b1}, {a, b2}, {b1, oa1}, {b1, ob1}, {b2, oa2}, {b2, ob2},
                                {w2, b1}, {w2, b2}, {w1, a}, {w2, v}, {v, w1}});
}

TEST(Families, ChainBasics) {
  EXPECT_TRUE(is_isomorphic(chain(2), testing::cycle_graph(5)));
  const Graph ch4 = chain(4);
  EXPECT_EQ(ch4.order(), 11);
  EXPECT_EQ(ch4.size(), 15);
  EXPECT_TRUE(is_connected(chain(3)));
  EXPECT_THROW(chain(1), GraphError);
  // A bivalent vertex next to a trivalent one has second valency 5.
  const Graph ch3 = chain(3);
  bool found = false;
  for (int v : bivalent_vertices(ch3)) {
    for (int w : ch3.neighbors(v)) {
      if (ch3.degree(w) == 3) {
        EXPECT_EQ(ch3.second_valency(v), 5);
        found = true;
      }
    }
  }
  EXPECT_TRUE(found);
}

// Every sequence of bivalent choices yields the same graph up to isomorphism.
void expect_choice_independent(const Graph& start, int steps, const std::string& expected_cert) {
  std::vector<Graph> layer{start};
  for (int s = 0; s < steps; ++s) {
    std::map<std::string, Graph> next;
    for (const Graph& g : layer) {
      for (int x : bivalent_vertices(g)) {
        Graph h = extend_at(g, x);
        next.emplace(certificate(h), h);
      }
    }
    ASSERT_EQ(next.size(), 1u) << "step " << s + 1 << " depends on the chosen vertex";
    layer = {next.begin()->second};
  }
  EXPECT_EQ(certificate(layer.front()), expected_cert);
}

TEST(Families, ChainConstructionIsChoiceIndependent) {
  for (int k = 3; k <= 7; ++k) expect_choice_independent(chain(2), k - 2, certificate(chain(k)));
}

TEST(Families, ShackledChainMatchesDrawingAndIsChoiceIndependent) {
  EXPECT_TRUE(is_isomorphic(shackled_chain(1), drawn_shackled_chain_1()));
  EXPECT_TRUE(is_isomorphic(shackled_chain(2), drawn_shackled_chain_2()));
  // Both ways of pairing the two bivalent edges of Ch_3 give the same graph.
  const Graph ch3 = chain(3);
  EXPECT_TRUE(is_isomorphic(shackle(ch3, 2, 3, 5, 6), shackle(ch3, 2, 3, 6, 5)));
  EXPECT_TRUE(is_isomorphic(shackle(ch3, 2, 3, 5, 6), shackled_chain(1)));
  EXPECT_EQ(bivalent_vertices(shackled_chain(1)).size(), 1u);
  for (int k = 2; k <= 7; ++k) expect_choice_independent(shackled_chain(1), k - 1, certificate(shackled_chain(k)));
}

TEST(Families, BicycleAndCubicGraphs) {
  const Graph bc5 = bicycle(5);
  EXPECT_EQ(bc5.order(), 15);
  EXPECT_EQ(bc5.size(), 25);
  for (const Graph& g : {w5(), gp72()}) {
    EXPECT_EQ(g.order(), 14);
    EXPECT_EQ(g.size(), 21);
    EXPECT_EQ(g.min_degree(), 3);
    EXPECT_EQ(g.max_degree(), 3);
    EXPECT_EQ(girth(g), 5);
    EXPECT_TRUE(is_connected(g));
  }
  EXPECT_FALSE(is_isomorphic(w5(), gp72()));
  EXPECT_THROW(bicycle(3), GraphError);
}

TEST(Families, SmallCyclicGraphs) {
  const Graph g = s2();
  EXPECT_EQ(g.order(), 12);
  EXPECT_EQ(g.size(), 14);
  int trivalent = 0;
  for (int v = 0; v < g.order(); ++v) trivalent += g.degree(v) == 3;
  EXPECT_EQ(trivalent, 4);
  EXPECT_EQ(s1().size(), 13);
  EXPECT_THROW(cycle(2), GraphError);
}

TEST(Families, ReductionsStayInFamily) {
  for (int k = 3; k <= 7; ++k) {
    const Graph g = chain(k);
    for (int v : bivalent_vertices(g)) EXPECT_TRUE(is_isomorphic(reduce_closed(g, v).graph, chain(k - 1)));
  }
  for (int k = 5; k <= 8; ++k) {
    const Graph g = bicycle(k);
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 3) EXPECT_TRUE(is_isomorphic(reduce_closed(g, v).graph, chain(k - 1)));
    }
  }
}

TEST(Families, Classification) {
  const auto c5 = classify_in_G(testing::cycle_graph(5));
  ASSERT_TRUE(c5.has_value());
  EXPECT_EQ(c5->family, Family::Chain);
  EXPECT_EQ(c5->parameter, 2);
  EXPECT_FALSE(classify_in_G(testing::cycle_graph(7)).has_value());
  std::mt19937_64 rng(31);
  for (const Graph& g : {chain(5), w5(), gp72(), bicycle(6)}) {
    const auto m = classify_in_G(testing::random_permutation_of(g, rng));
    ASSERT_TRUE(m.has_value()) << g.label();
    EXPECT_TRUE(is_isomorphic(m->graph, g));
  }
  EXPECT_FALSE(classify_in_G(bicycle(4)).has_value());
  EXPECT_FALSE(classify_in_G(shackled_chain(2)).has_value());
  const auto sch = classify_chain_like(shackled_chain(2));
  ASSERT_TRUE(sch.has_value());
  EXPECT_EQ(sch->family, Family::ShackledChain);
}

TEST(Families, TableMatchesClosedForms) {
  const auto table = family_table(6);
  EXPECT_EQ(table.size(), 16u);  // Ch_2..6, BC_4..6, SCh_1..6, W5, GP72
  for (const auto& r : table) {
    if (r.name == "Ch_6") {
      EXPECT_EQ(r.n, 17);
      EXPECT_EQ(r.e, 25);
      EXPECT_EQ(r.alpha, 6);
      EXPECT_EQ(r.c4, 4);
    }
    if (r.name == "SCh_4") {
      EXPECT_EQ(r.n, 20);
      EXPECT_EQ(r.e, 31);
      EXPECT_EQ(r.alpha, 7);
      EXPECT_EQ(r.c4, 4);
    }
    if (r.name == "BC_4") EXPECT_EQ(r.nu, 1);
    EXPECT_TRUE(r.edge_critical) << r.name;
  }
}

TEST(Families, CycleInvariants) {
  EXPECT_EQ(nu(cycle(5)), 0);
  EXPECT_EQ(nu(cycle(7)), 7);
  for (int m = 5; m <= 15; m += 2) EXPECT_GE(2 * nu(cycle(m)), 7 * (m - 5));
}

TEST(Families, GoldenGraph6Fixtures) {
  std::ifstream in(std::string(TRIFREE_DATA_DIR) + "/families.g6");
  ASSERT_TRUE(in) << "missing data/families.g6";
  std::map<std::string, Graph> ours;
  for (int k = 2; k <= 10; ++k) ours.emplace("Ch_" + std::to_string(k), chain(k));
  for (int k = 4; k <= 10; ++k) ours.emplace("BC_" + std::to_string(k), bicycle(k));
  for (int k = 1; k <= 10; ++k) ours.emplace("SCh_" + std::to_string(k), shackled_chain(k));
  for (int n = 3; n <= 10; ++n) ours.emplace("C" + std::to_string(n), cycle(n));
  ours.emplace("W5", w5());
  ours.emplace("GP72", gp72());
  ours.emplace("S1", s1());
  ours.emplace("S2", s2());
  std::string line;
  std::size_t seen = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string name, g6;
    fields >> name >> g6;
    ASSERT_TRUE(ours.count(name)) << name;
    EXPECT_EQ(to_graph6(ours.at(name)), g6) << name;
    ++seen;
  }
  EXPECT_EQ(seen, ours.size());
}

}  // namespace
}  // namespace trifree
