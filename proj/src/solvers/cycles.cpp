#include <string>

#include "trifree/solvers.hpp"

namespace trifree {

namespace {

void check_length(int k) {
  if (k < kMinCycleLength || k > kMaxCycleLength) {
    throw GraphError(ErrorCode::InvalidArgument, "cycle length must be in 3..8, got " + std::to_string(k));
  }
}

// Rooted path extension: a cycle is reported from its minimum vertex only,
// and only in the orientation whose second vertex is below its last.
class CycleWalker {
 public:
  CycleWalker(const Graph& g, int k) : g_(g), k_(k), adj_(static_cast<std::size_t>(g.order())), on_path_(static_cast<std::size_t>(g.order()), 0) {
    for (int v = 0; v < g.order(); ++v) adj_[static_cast<std::size_t>(v)] = g.neighbors(v);
  }

  template <class F>
  void run(F&& emit) {
    for (int root = 0; root < g_.order(); ++root) {
      path_.assign(1, root);
      on_path_[static_cast<std::size_t>(root)] = 1;
      extend(root, emit);
      on_path_[static_cast<std::size_t>(root)] = 0;
    }
  }

 private:
  template <class F>
  void extend(int root, F& emit) {
    const int last = path_.back();
    const bool closing = static_cast<int>(path_.size()) == k_;
    if (closing) {
      if (path_[1] < last && g_.adjacent(last, root)) emit(std::span<const int>(path_));
      return;
    }
    for (int w : adj_[static_cast<std::size_t>(last)]) {
      if (w <= root || on_path_[static_cast<std::size_t>(w)]) continue;
      path_.push_back(w);
      on_path_[static_cast<std::size_t>(w)] = 1;
      extend(root, emit);
      on_path_[static_cast<std::size_t>(w)] = 0;
      path_.pop_back();
    }
  }

  const Graph& g_;
  int k_;
  std::vector<std::vector<int>> adj_;
  std::vector<char> on_path_;
  std::vector<int> path_;
};

}  // namespace

CycleCount count_cycles(const Graph& g, int k) {
  check_length(k);
  CycleCount out{k, 0, std::vector<std::int64_t>(static_cast<std::size_t>(g.order()), 0)};
  CycleWalker(g, k).run([&](std::span<const int> cycle) {
    ++out.total;
    for (int v : cycle) ++out.through[static_cast<std::size_t>(v)];
  });
  return out;
}

std::int64_t count_cycles_through(const Graph& g, int k, const VertexSet& s) {
  check_length(k);
  if (s.universe() != g.order()) throw GraphError(ErrorCode::InvalidArgument, "vertex set does not match graph order");
  std::int64_t total = 0;
  CycleWalker(g, k).run([&](std::span<const int> cycle) {
    for (int v : cycle) {
      if (s.contains(v)) {
        ++total;
        return;
      }
    }
  });
  return total;
}

void for_each_cycle(const Graph& g, int k, const std::function<void(std::span<const int>)>& visit) {
  check_length(k);
  CycleWalker(g, k).run(visit);
}

std::int64_t e2_twice(const Graph& g) {
  std::int64_t sum = 0;
  for (int v = 0; v < g.order(); ++v) {
    const std::int64_t d = g.degree(v);
    sum += d * d;
  }
  return sum;
}

std::int64_t e2_half_sum(const Graph& g) { return e2_twice(g) / 2; }

}  // namespace trifree
