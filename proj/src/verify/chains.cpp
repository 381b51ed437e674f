#include <algorithm>

#include "mask_graph.hpp"
#include "trifree/families.hpp"
#include "trifree/graph6.hpp"
#include "trifree/verify.hpp"

namespace trifree {
namespace {

using namespace verify_detail;

constexpr int kMaxChainParameter = 7;

Mask bivalent_mask(const MaskGraph& m) {
  Mask out = 0;
  for (int v = 0; v < m.n; ++v) {
    if (count(m.nbhd(v)) == 2) out |= bit(v);
  }
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (int x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

// No destabiliser of size <= 2; the size-3 destabilisers are exactly the
// closed neighbourhoods of bivalent vertices.
PropertyCheckResult destab3(int k_max) {
  PropertyCheckResult r;
  r.property_id = "Chkdestab3";
  std::vector<int> counts;
  for (int k = 2; k <= k_max; ++k) {
    const Graph g = chain(k);
    const MaskGraph m(g);
    const std::string g6 = to_graph6(g);
    const int a = m.alpha(m.all);
    ++r.graphs_tested;
    ++r.hypothesis_hits;
    for (int s = 1; s <= 2; ++s) {
      for_each_submask_of_size(m.all, s, [&](Mask set) {
        if (m.destabilises(m.all, set, a)) r.fail(g6, "Ch_" + std::to_string(k) + ": small destabiliser " + describe(set));
      });
    }
    std::vector<Mask> expected;
    for_each_bit(bivalent_mask(m), [&](int v) { expected.push_back(m.closed(v)); });
    std::sort(expected.begin(), expected.end());
    std::vector<Mask> found;
    for_each_submask_of_size(m.all, 3, [&](Mask set) {
      if (m.destabilises(m.all, set, a)) found.push_back(set);
    });
    std::sort(found.begin(), found.end());
    if (found != expected) {
      r.fail(g6, "Ch_" + std::to_string(k) + ": " + std::to_string(found.size()) + " size-3 destabilisers, expected " +
                     std::to_string(expected.size()));
    }
    counts.push_back(static_cast<int>(found.size()));
  }
  r.note = "size-3 destabilisers for k = 2.." + std::to_string(k_max) + ": " + join(counts);
  return r;
}

// Minimal destabilisers of size 4 that induce a disconnected graph occur
// only in Ch_3, where the bivalent vertices form the only one.
PropertyCheckResult destab4(int k_max) {
  PropertyCheckResult r;
  r.property_id = "Chkdestab4";
  std::vector<int> counts;
  for (int k = 2; k <= k_max; ++k) {
    const Graph g = chain(k);
    const MaskGraph m(g);
    const std::string g6 = to_graph6(g);
    const int a = m.alpha(m.all);
    const Mask v2 = bivalent_mask(m);
    ++r.graphs_tested;
    int found = 0;
    for_each_submask_of_size(m.all, std::min(4, m.n - 1), [&](Mask set) {
      if (count(set) != 4 || m.connected(set) || !m.destabilises(m.all, set, a)) return;
      bool minimal = true;
      for_each_bit(set, [&](int x) { minimal = minimal && !m.destabilises(m.all, set & ~bit(x), a); });
      if (!minimal) return;
      ++found;
      ++r.hypothesis_hits;
      if (k != 3 || set != v2) r.fail(g6, "Ch_" + std::to_string(k) + ": disconnected minimal destabiliser " + describe(set));
    });
    counts.push_back(found);
  }
  r.note = "disconnected minimal size-4 destabilisers for k = 2.." + std::to_string(k_max) + ": " + join(counts);
  return r;
}

// Ch_k plus an edge between non-adjacent bivalent vertices: no 3-set with
// at least two bivalent vertices (independent, when exactly two)
// destabilises it.
PropertyCheckResult plus_edge(int k_max) {
  PropertyCheckResult r;
  r.property_id = "Chkplusedge";
  for (int k = 3; k <= k_max; ++k) {
    const Graph base = chain(k);
    const MaskGraph bm(base);
    const Mask v2 = bivalent_mask(bm);
    for_each_bit(v2, [&](int x) {
      for_each_bit(v2 & ~((bit(x) << 1) - 1) & ~bm.nbhd(x), [&](int y) {
        const Graph g = add_edge(base, x, y);
        const MaskGraph m(g);
        const int a = m.alpha(m.all);
        ++r.graphs_tested;
        ++r.hypothesis_hits;
        for_each_submask_of_size(m.all, 3, [&](Mask s) {
          const Mask b = s & v2;
          if (count(b) < 2) return;
          if (count(b) == 2 && (bm.nbhd(std::countr_zero(b)) & b) != 0) return;
          if (m.destabilises(m.all, s, a)) {
            r.fail(to_graph6(g), "Ch_" + std::to_string(k) + " + " + std::to_string(x) + "-" + std::to_string(y) +
                                     ": " + describe(s) + " destabilises");
          }
        });
      });
    });
  }
  r.note = "all non-adjacent bivalent pairs of Ch_3..Ch_" + std::to_string(k_max);
  return r;
}

// Chains are edge-critical and stay connected after reduction at any
// bivalent vertex.
PropertyCheckResult bivalent_reduction(int k_max) {
  PropertyCheckResult r;
  r.property_id = "ecbvconn.chains";
  for (int k = 2; k <= k_max; ++k) {
    const Graph g = chain(k);
    const MaskGraph m(g);
    const std::string g6 = to_graph6(g);
    const int a = m.alpha(m.all);
    ++r.graphs_tested;
    bool critical = true;
    for (const Edge& e : g.edges()) critical = critical && !m.redundant(m.all, a, e.u, e.v);
    if (!critical) {
      r.fail(g6, "Ch_" + std::to_string(k) + " has a redundant edge");
      continue;
    }
    ++r.hypothesis_hits;
    for_each_bit(bivalent_mask(m), [&](int v) {
      if (!m.connected(m.all & ~m.closed(v))) r.fail(g6, "Ch_" + std::to_string(k) + ": G_v disconnected at v=" + std::to_string(v));
    });
  }
  return r;
}

}  // namespace

std::vector<PropertyCheckResult> verify_chain_lemmas(int k_max) {
  if (k_max < 2 || k_max > kMaxChainParameter) {
    throw GraphError(ErrorCode::InvalidArgument, "k_max must be in 2.." + std::to_string(kMaxChainParameter));
  }
  std::vector<PropertyCheckResult> out;
  out.push_back(destab3(k_max));
  out.push_back(destab4(k_max));
  if (k_max >= 3) out.push_back(plus_edge(k_max));
  out.push_back(bivalent_reduction(k_max));
  return out;
}

}  // namespace trifree
