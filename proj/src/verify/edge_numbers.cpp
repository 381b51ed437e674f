#include <algorithm>

#include "mask_graph.hpp"
#include "trifree/enumerate.hpp"
#include "trifree/graph6.hpp"
#include "trifree/verify.hpp"

namespace trifree {
namespace {

using namespace verify_detail;

struct Best {
  int edges = 0;
  std::string graph6;
};

// Fewest edges per independence number, over all graphs and over the
// C4-free ones; the first graph reaching the minimum is kept.
struct ByAlpha {
  std::vector<std::optional<Best>> all;
  std::vector<std::optional<Best>> c4free;
};

void offer(std::optional<Best>& slot, const Graph& g) {
  if (!slot || g.size() < slot->edges) slot = Best{g.size(), to_graph6(g)};
}

void offer(std::optional<Best>& slot, const std::optional<Best>& other) {
  if (other && (!slot || other->edges < slot->edges)) slot = other;
}

}  // namespace

bool EdgeNumberTable::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const EdgeNumberCell& c) { return c.bound_ok && c.c4free_bound_ok; });
}

const EdgeNumberCell* EdgeNumberTable::cell(int n, int k) const {
  for (const EdgeNumberCell& c : rows) {
    if (c.n == n && c.k == k) return &c;
  }
  return nullptr;
}

EdgeNumberTable edge_number_table(int n_max, int k_max, int jobs) {
  if (n_max < 1 || n_max > enumeration_cap()) {
    throw GraphError(ErrorCode::InvalidArgument, "n_max must be in 1.." + std::to_string(enumeration_cap()));
  }
  if (k_max < 1) throw GraphError(ErrorCode::InvalidArgument, "k_max must be positive");
  EdgeNumberTable table;
  table.n_max = n_max;
  table.k_max = k_max;
  for (int n = 1; n <= n_max; ++n) {
    const std::size_t slots_per = static_cast<std::size_t>(n) + 1;
    const ByAlpha blank{std::vector<std::optional<Best>>(slots_per), std::vector<std::optional<Best>>(slots_per)};
    const Enumerator en({n, false, 4, std::nullopt});
    const auto slots = run_items(en, jobs, blank, [](ByAlpha& acc, const Graph& g) {
      const MaskGraph m(g);
      const auto a = static_cast<std::size_t>(m.alpha(m.all));
      offer(acc.all[a], g);
      if (m.c4(m.all) == 0) offer(acc.c4free[a], g);
    });
    ByAlpha merged = blank;
    for (const ByAlpha& s : slots) {
      for (std::size_t a = 0; a < slots_per; ++a) {
        offer(merged.all[a], s.all[a]);
        offer(merged.c4free[a], s.c4free[a]);
      }
    }
    std::optional<Best> all_upto;
    std::optional<Best> c4free_upto;
    for (int k = 1; k <= std::min(k_max, n); ++k) {
      offer(all_upto, merged.all[static_cast<std::size_t>(k)]);
      offer(c4free_upto, merged.c4free[static_cast<std::size_t>(k)]);
      EdgeNumberCell c;
      c.n = n;
      c.k = k;
      c.bound = 6LL * n - 13LL * k;
      c.c4free_bound_times3 = 17LL * n - 35LL * k;
      if (all_upto) {
        c.min_edges = all_upto->edges;
        c.certificate = all_upto->graph6;
        c.bound_ok = *c.min_edges >= c.bound;
      }
      if (c4free_upto) {
        c.c4free_min_edges = c4free_upto->edges;
        c.c4free_certificate = c4free_upto->graph6;
        c.c4free_bound_ok = 3LL * *c.c4free_min_edges >= c.c4free_bound_times3;
      }
      table.rows.push_back(std::move(c));
    }
  }
  return table;
}

}  // namespace trifree
