#include <algorithm>
#include <array>
#include <bit>

#include "trifree/solvers.hpp"

namespace trifree {

namespace {

template <std::size_t W>
using Bits = std::array<std::uint64_t, W>;

template <std::size_t W>
bool none(const Bits<W>& a) {
  for (auto w : a) {
    if (w) return false;
  }
  return true;
}

template <std::size_t W>
int count(const Bits<W>& a) {
  int c = 0;
  for (auto w : a) c += std::popcount(w);
  return c;
}

template <std::size_t W>
int count_and(const Bits<W>& a, const Bits<W>& b) {
  int c = 0;
  for (std::size_t i = 0; i < W; ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

template <std::size_t W>
int lowest(const Bits<W>& a) {
  for (std::size_t i = 0; i < W; ++i) {
    if (a[i]) return static_cast<int>(i * 64) + std::countr_zero(a[i]);
  }
  return -1;
}

template <std::size_t W>
void set_bit(Bits<W>& a, int v) { a[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }

template <std::size_t W>
void clear_bit(Bits<W>& a, int v) { a[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

template <std::size_t W, class F>
void for_each_bit(const Bits<W>& a, F&& f) {
  for (std::size_t i = 0; i < W; ++i) {
    for (std::uint64_t b = a[i]; b; b &= b - 1) f(static_cast<int>(i * 64) + std::countr_zero(b));
  }
}

template <std::size_t W>
class MisSolver {
 public:
  MisSolver(const Graph& g, bool track_witness) : n_(g.order()), track_(track_witness), rows_(static_cast<std::size_t>(g.order())) {
    for (int v = 0; v < n_; ++v) {
      const auto r = g.row(v);
      std::copy(r.begin(), r.end(), rows_[static_cast<std::size_t>(v)].begin());
    }
  }
  MisSolver(std::span<const std::uint64_t> rows, bool track_witness)
      : n_(static_cast<int>(rows.size())), track_(track_witness), rows_(rows.size()) {
    for (std::size_t v = 0; v < rows.size(); ++v) rows_[v][0] = rows[v];
  }

  int solve(const Bits<W>& candidates) {
    best_ = -1;
    Bits<W> chosen{};
    search(candidates, 0, chosen);
    return best_;
  }

  const Bits<W>& best_set() const { return best_set_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  const Bits<W>& row(int v) const { return rows_[static_cast<std::size_t>(v)]; }

  void remove_closed(Bits<W>& p, int v) const {
    const Bits<W>& r = row(v);
    for (std::size_t i = 0; i < W; ++i) p[i] &= ~r[i];
    clear_bit(p, v);
  }

  // Upper bound on α(P): number of cliques in a greedy clique cover.
  int clique_cover(Bits<W> rest) const {
    int cliques = 0;
    while (!none(rest)) {
      const int v = lowest(rest);
      clear_bit(rest, v);
      Bits<W> cand;
      for (std::size_t i = 0; i < W; ++i) cand[i] = rest[i] & row(v)[i];
      while (!none(cand)) {
        const int u = lowest(cand);
        clear_bit(rest, u);
        for (std::size_t i = 0; i < W; ++i) cand[i] &= row(u)[i];
      }
      ++cliques;
    }
    return cliques;
  }

  void record(int size, const Bits<W>& chosen) {
    if (size > best_) {
      best_ = size;
      if (track_) best_set_ = chosen;
    }
  }

  void search(Bits<W> p, int size, Bits<W> chosen) {
    ++nodes_;
    // Vertices of degree 0 or 1 belong to some maximum independent set.
    for (bool again = true; again;) {
      again = false;
      for_each_bit(p, [&](int v) {
        if (!((p[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1)) return;
        if (count_and(row(v), p) <= 1) {
          remove_closed(p, v);
          if (track_) set_bit(chosen, v);
          ++size;
          again = true;
        }
      });
    }
    if (none(p)) {
      record(size, chosen);
      return;
    }
    if (size + clique_cover(p) <= best_) return;

    int pivot = -1;
    int pivot_degree = -1;
    for_each_bit(p, [&](int v) {
      const int d = count_and(row(v), p);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    });

    Bits<W> with = p;
    remove_closed(with, pivot);
    Bits<W> with_chosen = chosen;
    if (track_) set_bit(with_chosen, pivot);
    search(with, size + 1, with_chosen);

    clear_bit(p, pivot);
    search(p, size, chosen);
  }

  int n_;
  bool track_;
  std::vector<Bits<W>> rows_;
  int best_ = -1;
  Bits<W> best_set_{};
  std::int64_t nodes_ = 0;
};

template <std::size_t W>
IndependenceResult solve_with(const Graph& g, const VertexSet& allowed, bool track) {
  MisSolver<W> solver(g, track);
  Bits<W> p{};
  const auto words = allowed.words();
  std::copy(words.begin(), words.end(), p.begin());
  IndependenceResult out;
  out.alpha = solver.solve(p);
  out.node_count = solver.nodes();
  if (track) {
    out.witness = VertexSet(g.order());
    for_each_bit(solver.best_set(), [&](int v) { out.witness.insert(v); });
  }
  return out;
}

IndependenceResult dispatch(const Graph& g, const VertexSet& allowed, bool track) {
  const int w = g.words_per_row();
  if (w <= 1) return solve_with<1>(g, allowed, track);
  if (w <= 2) return solve_with<2>(g, allowed, track);
  if (w <= 4) return solve_with<4>(g, allowed, track);
  if (w <= 8) return solve_with<8>(g, allowed, track);
  if (w <= 16) return solve_with<16>(g, allowed, track);
  if (w <= 32) return solve_with<32>(g, allowed, track);
  return solve_with<64>(g, allowed, track);
}

}  // namespace

IndependenceResult independence_number(const Graph& g) { return dispatch(g, VertexSet::full(g.order()), true); }

int max_independent_avoiding(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw GraphError(ErrorCode::InvalidArgument, "vertex set does not match graph order");
  return dispatch(g, s.complement(), false).alpha;
}

int independence_number_of_mask(std::span<const std::uint64_t> rows, std::uint64_t mask) {
  if (rows.size() > 64) throw GraphError(ErrorCode::OrderTooLarge, "single-word rows need n <= 64");
  MisSolver<1> solver(rows, false);
  return solver.solve({mask});
}

}  // namespace trifree
