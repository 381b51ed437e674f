#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "trifree/graph.hpp"

namespace trifree {

struct EnumerationSpec {
  int order = 1;
  bool connected_only = false;
  int min_girth = 4;  // 4: triangle-free; 5: additionally C4-free
  std::optional<int> max_degree;
};

/// Hard order limit for enumeration.
inline constexpr int kEnumerationHardCap = 14;

/// The hard cap, lowered (never raised) by a positive TRIFREE_CAP value.
int enumeration_cap();
void validate(const EnumerationSpec& spec);

/// Isomorph-free generation by canonical augmentation.
///
/// Every triangle-free (or C<=4-free) graph of order n is reached from
/// exactly one canonical parent of order n−1: the graph minus the vertex of
/// largest (degree, second valency) that comes last in the canonical order.
/// A child is kept when deleting that vertex gives back its parent, and
/// children of one parent are deduplicated by certificate. Connectivity is
/// a filter at the target order only.
///
/// The work is split into items: the canonical graphs of a fixed
/// intermediate order (depending on the target order only), each expanded
/// depth-first. Items are numbered deterministically, so any grouping of
/// items yields the same graphs, and concatenating item outputs in index
/// order gives the same stream regardless of how many workers ran them.
class Enumerator {
 public:
  explicit Enumerator(EnumerationSpec spec);

  const EnumerationSpec& spec() const { return spec_; }
  int item_count() const { return static_cast<int>(items_.size()); }
  /// Emits the canonical representatives descending from item i.
  void run_item(int i, const std::function<void(const Graph&)>& emit) const;

 private:
  struct Node {
    int n = 0;
    std::uint64_t rows[kEnumerationHardCap] = {};
  };

  void expand(const Node& parent, std::vector<Node>& children) const;
  void descend(const Node& node, const std::function<void(const Graph&)>& emit) const;
  void emit_if_wanted(const Node& node, const std::function<void(const Graph&)>& emit) const;

  EnumerationSpec spec_;
  std::vector<Node> items_;
};

/// All representatives in the deterministic item order.
void enumerate(const EnumerationSpec& spec, const std::function<void(const Graph&)>& emit);
std::vector<Graph> enumerate_all(const EnumerationSpec& spec);
/// Items with index ≡ part (mod parts); the parts partition the full output.
void enumerate_partition(const EnumerationSpec& spec, int part, int parts, const std::function<void(const Graph&)>& emit);
std::int64_t count_classes(const EnumerationSpec& spec, int jobs = 1);

/// Reference generator: filters all labelled graphs and keeps one canonical
/// graph per certificate, sorted by certificate. Order <= 7.
std::vector<Graph> naive_enumerate(const EnumerationSpec& spec);

/// Runs `visit(acc, graph)` over every enumerated graph with `jobs` worker
/// threads and returns one accumulator per item, in item order. Merging the
/// result front to back is therefore independent of `jobs`.
template <class Acc, class Visit>
std::vector<Acc> run_items(const Enumerator& en, int jobs, const Acc& init, Visit visit) {
  std::vector<Acc> slots(static_cast<std::size_t>(en.item_count()), init);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < en.item_count(); i = next.fetch_add(1)) {
      Acc& acc = slots[static_cast<std::size_t>(i)];
      en.run_item(i, [&](const Graph& g) { visit(acc, g); });
    }
  };
  const int threads = std::max(1, std::min(jobs, en.item_count()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return slots;
}

}  // namespace trifree
