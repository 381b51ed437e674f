#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "test_support.hpp"
#include "trifree/canonical.hpp"
#include "trifree/enumerate.hpp"
#include "trifree/families.hpp"
#include "trifree/graph6.hpp"
#include "trifree/solvers.hpp"
#include "trifree/verify.hpp"

namespace trifree {
namespace {

const PropertyCheckResult& find(const std::vector<PropertyCheckResult>& rs, const std::string& id) {
  auto it = std::find_if(rs.begin(), rs.end(), [&](const PropertyCheckResult& r) { return r.property_id == id; });
  EXPECT_NE(it, rs.end()) << id;
  return *it;
}

std::int64_t naive_nu(const Graph& g) {
  return 3LL * g.size() - 17LL * g.order() + 35LL * testing::brute_force_alpha(g) + count_cycles(g, 4).total;
}

TEST(MainTheorem, AgreesWithNaivePipelineUpToSeven) {
  const MainTheoremReport rep = verify_main_theorem(7);
  ASSERT_EQ(rep.orders.size(), 7u);
  for (int n = 1; n <= 7; ++n) {
    const OrderSummary& o = rep.orders[static_cast<std::size_t>(n - 1)];
    const auto graphs = naive_enumerate({n, true, 4, std::nullopt});
    EXPECT_EQ(o.classes, static_cast<std::int64_t>(graphs.size()));
    std::int64_t min_nu = naive_nu(graphs.front());
    std::set<std::string> zero;
    for (const Graph& g : graphs) {
      const std::int64_t nu = naive_nu(g);
      min_nu = std::min(min_nu, nu);
      if (nu == 0) zero.insert(certificate(g));
    }
    EXPECT_EQ(o.min_nu, min_nu) << n;
    std::set<std::string> reported;
    for (const NuZeroClass& z : o.nu_zero) reported.insert(certificate(parse_graph6(z.graph6)));
    EXPECT_EQ(reported, zero) << n;
  }
  EXPECT_TRUE(rep.passed());
}

TEST(MainTheorem, OnlyFiveCycleUpToFive) {
  const MainTheoremReport rep = verify_main_theorem(5);
  std::vector<std::string> members;
  for (const OrderSummary& o : rep.orders) {
    for (const NuZeroClass& z : o.nu_zero) members.push_back(z.member.value_or("?"));
  }
  EXPECT_EQ(members, std::vector<std::string>{"Ch_2"});
}

TEST(MainTheorem, ZeroClassesRoundTripThroughTheirFamily) {
  const MainTheoremReport rep = verify_main_theorem(11, 2);
  ASSERT_TRUE(rep.passed());
  std::vector<std::string> members;
  for (const OrderSummary& o : rep.orders) {
    EXPECT_GE(o.min_nu.value(), 0);
    EXPECT_GE(o.min_t.value(), 0);
    EXPECT_TRUE(o.missing_members.empty());
    for (const NuZeroClass& z : o.nu_zero) {
      ASSERT_TRUE(z.member);
      members.push_back(*z.member);
      const int k = std::stoi(z.member->substr(3));
      EXPECT_TRUE(is_isomorphic(chain(k), parse_graph6(z.graph6)));
    }
  }
  EXPECT_EQ(members, (std::vector<std::string>{"Ch_2", "Ch_3", "Ch_4"}));
}

TEST(MainTheorem, RejectsOrdersAboveCap) {
  EXPECT_THROW(verify_main_theorem(kEnumerationHardCap + 1), GraphError);
  EXPECT_THROW(verify_main_theorem(0), GraphError);
}

TEST(PropertySuite, NamedExamples) {
  EXPECT_EQ(verify_property_suite(9, "prop-mindeg2").at(0).failure_count, 0);
  const auto bp = verify_property_suite(10, "balancedpair");
  ASSERT_EQ(bp.size(), 1u);
  EXPECT_EQ(bp[0].failure_count, 0);
  EXPECT_GT(bp[0].hypothesis_hits, 0);
  const auto cp = verify_property_suite(11, "classprop1");
  EXPECT_EQ(cp.at(0).failure_count, 0);
  EXPECT_GT(cp.at(0).hypothesis_hits - cp.at(0).family_hits, 0);
}

TEST(PropertySuite, EveryPropertyReported) {
  const auto rs = verify_property_suite(7);
  std::vector<std::string> ids;
  for (const auto& r : rs) ids.push_back(r.property_id);
  EXPECT_EQ(ids, property_ids());
  for (const auto& r : rs) EXPECT_TRUE(r.passed()) << r.property_id;
}

TEST(PropertySuite, UnknownFilterThrows) {
  EXPECT_THROW(verify_property_suite(5, "no-such-property"), GraphError);
}

TEST(PropertySuite, JobsDoNotChangeResults) {
  const auto a = verify_property_suite(8, "all", 1);
  const auto b = verify_property_suite(8, "all", 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].graphs_tested, b[i].graphs_tested);
    EXPECT_EQ(a[i].hypothesis_hits, b[i].hypothesis_hits);
  }
}

TEST(PropertyCheckResult, StoresBoundedFailures) {
  PropertyCheckResult r;
  for (std::size_t i = 0; i < kMaxStoredFailures + 5; ++i) r.fail("D??", "x");
  EXPECT_EQ(r.failure_count, static_cast<std::int64_t>(kMaxStoredFailures + 5));
  EXPECT_EQ(r.failures.size(), kMaxStoredFailures);
  EXPECT_FALSE(r.passed());
  PropertyCheckResult s;
  s.merge(r);
  EXPECT_EQ(s.failure_count, r.failure_count);
}

TEST(ChainLemmas, DestabiliserCounts) {
  const auto rs = verify_chain_lemmas(5);
  EXPECT_NE(find(rs, "Chkdestab3").note.find("5,4,4,4"), std::string::npos);
  EXPECT_NE(find(rs, "Chkdestab4").note.find("0,1,0,0"), std::string::npos);
  for (const auto& r : rs) EXPECT_TRUE(r.passed()) << r.property_id;
  EXPECT_GT(find(rs, "Chkplusedge").graphs_tested, 0);
}

TEST(ChainLemmas, ParameterRange) {
  EXPECT_THROW(verify_chain_lemmas(1), GraphError);
  EXPECT_THROW(verify_chain_lemmas(8), GraphError);
  const auto rs = verify_chain_lemmas(2);
  EXPECT_TRUE(std::none_of(rs.begin(), rs.end(), [](const auto& r) { return r.property_id == "Chkplusedge"; }));
}

TEST(EdgeNumbers, FiveCycleCell) {
  const EdgeNumberTable t = edge_number_table(5, 5);
  const EdgeNumberCell* c = t.cell(5, 2);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->min_edges, 5);
  EXPECT_EQ(c->bound, 4);
  EXPECT_TRUE(c->bound_ok);
  EXPECT_EQ(c->c4free_min_edges, 5);
  EXPECT_EQ(c->c4free_bound_times3, 15);
  EXPECT_TRUE(is_isomorphic(parse_graph6(c->c4free_certificate), testing::cycle_graph(5)));
  EXPECT_TRUE(is_isomorphic(parse_graph6(c->certificate), testing::cycle_graph(5)));
  // No triangle-free graph on five vertices has α = 1: the cell is infeasible.
  ASSERT_NE(t.cell(5, 1), nullptr);
  EXPECT_FALSE(t.cell(5, 1)->min_edges);
  EXPECT_TRUE(t.cell(5, 1)->bound_ok);
}

TEST(EdgeNumbers, MatchesNaiveMinimaUpToSeven) {
  const EdgeNumberTable t = edge_number_table(7, 7);
  for (int n = 1; n <= 7; ++n) {
    const auto graphs = naive_enumerate({n, false, 4, std::nullopt});
    for (int k = 1; k <= n; ++k) {
      std::optional<int> best, best_c4free;
      for (const Graph& g : graphs) {
        if (testing::brute_force_alpha(g) > k) continue;
        if (!best || g.size() < *best) best = g.size();
        if (count_cycles(g, 4).total == 0 && (!best_c4free || g.size() < *best_c4free)) best_c4free = g.size();
      }
      const EdgeNumberCell* c = t.cell(n, k);
      ASSERT_NE(c, nullptr);
      EXPECT_EQ(c->min_edges, best) << n << "," << k;
      EXPECT_EQ(c->c4free_min_edges, best_c4free) << n << "," << k;
      if (c->min_edges) {
        const Graph cert = parse_graph6(c->certificate);
        EXPECT_EQ(cert.size(), *c->min_edges);
        EXPECT_LE(testing::brute_force_alpha(cert), k);
      }
    }
  }
}

TEST(Report, DeterministicAndVersioned) {
  VerifyOptions opt;
  opt.n_max = 7;
  opt.chain_k_max = 4;
  opt.jobs = 1;
  const auto a = to_json(run_verification(opt), false).dump();
  opt.jobs = 3;
  const VerificationReport rb = run_verification(opt);
  EXPECT_EQ(a, to_json(rb, false).dump());
  const auto timed = to_json(rb, true);
  EXPECT_TRUE(timed.contains("timing"));
  EXPECT_EQ(timed["schema_version"], kReportSchemaVersion);
  EXPECT_TRUE(rb.passed());
  EXPECT_TRUE(failure_lines(rb).empty());
  EXPECT_NE(text_summary(rb).find("PASSED"), std::string::npos);
}

TEST(Report, SuiteSelection) {
  VerifyOptions opt;
  opt.n_max = 6;
  opt.suite = "tretton.iii";
  const VerificationReport r = run_verification(opt);
  EXPECT_FALSE(r.main_theorem);
  ASSERT_TRUE(r.properties);
  EXPECT_EQ(r.properties->size(), 1u);
  opt.suite = "nonsense";
  EXPECT_THROW(run_verification(opt), GraphError);
}

}  // namespace
}  // namespace trifree
