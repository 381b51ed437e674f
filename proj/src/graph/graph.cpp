#include "trifree/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

namespace trifree {

namespace {

int word_count(int n) { return (n + 63) / 64; }

std::string describe_edge(const Edge& e) {
  std::ostringstream out;
  out << "(" << e.u << "," << e.v << ")";
  return out.str();
}

}  // namespace

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::VertexOutOfRange: return "vertex-out-of-range";
    case ErrorCode::LoopEdge: return "loop-edge";
    case ErrorCode::EmptyGraph: return "empty-graph";
    case ErrorCode::GraphVanished: return "graph-vanished";
    case ErrorCode::NotIndependent: return "not-independent";
    case ErrorCode::MissingEdge: return "missing-edge";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::OrderTooLarge: return "order-too-large";
    case ErrorCode::Precondition: return "precondition";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) throw GraphError(ErrorCode::InvalidArgument, "negative vertex set universe");
  words_.assign(static_cast<std::size_t>(word_count(universe)), 0);
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::span<const int> members) : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (int v = 0; v < universe; ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::from_word(int universe, std::uint64_t mask) {
  if (universe > 64) throw GraphError(ErrorCode::InvalidArgument, "from_word needs universe <= 64");
  VertexSet s(universe);
  if (universe < 64 && (mask >> universe) != 0) {
    throw GraphError(ErrorCode::VertexOutOfRange, "mask has bits beyond the universe");
  }
  if (universe > 0) s.words_[0] = mask;
  return s;
}

void VertexSet::check(int v) const {
  if (v < 0 || v >= universe_) {
    throw GraphError(ErrorCode::VertexOutOfRange,
                     "vertex " + std::to_string(v) + " outside 0.." + std::to_string(universe_ - 1));
  }
}

void VertexSet::check_same(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw GraphError(ErrorCode::InvalidArgument, "vertex sets over different universes");
  }
}

bool VertexSet::contains(int v) const {
  check(v);
  return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
}

void VertexSet::insert(int v) {
  check(v);
  words_[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(int v) {
  check(v);
  words_[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
}

int VertexSet::size() const noexcept {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

VertexSet VertexSet::complement() const {
  VertexSet out = full(universe_);
  out -= *this;
  return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n, std::string label) : n_(n), words_(word_count(n)), label_(std::move(label)) {
  if (n < 1) throw GraphError(ErrorCode::EmptyGraph, "graph must have at least one vertex");
  if (n > kMaxOrder) {
    throw GraphError(ErrorCode::OrderTooLarge,
                     "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  }
  rows_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(words_), 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw GraphError(ErrorCode::VertexOutOfRange,
                     "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
  }
}

void Graph::set_edge(int u, int v) {
  auto& a = rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64];
  const std::uint64_t bit = std::uint64_t{1} << (v % 64);
  if (a & bit) return;
  a |= bit;
  rows_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(u) / 64] |=
      std::uint64_t{1} << (u % 64);
  ++edges_;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges, std::string label) {
  Graph g(n, std::move(label));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw GraphError(ErrorCode::VertexOutOfRange,
                       "edge " + describe_edge(e) + " has a vertex outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw GraphError(ErrorCode::LoopEdge, "loop edge " + describe_edge(e));
    g.set_edge(e.u, e.v);
  }
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges, std::string label) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(label));
}

Graph Graph::from_rows(std::span<const std::uint64_t> rows, std::string label) {
  const int n = static_cast<int>(rows.size());
  if (n > kWordOrder) throw GraphError(ErrorCode::OrderTooLarge, "from_rows is limited to 64 vertices");
  Graph g(n, std::move(label));
  const std::uint64_t valid = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  int degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    const std::uint64_t r = rows[static_cast<std::size_t>(v)];
    if (r & ~valid) throw GraphError(ErrorCode::VertexOutOfRange, "row has bits beyond the order");
    if ((r >> v) & 1U) throw GraphError(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(v));
    for (std::uint64_t b = r; b; b &= b - 1) {
      const int u = __builtin_ctzll(b);
      if (!((rows[static_cast<std::size_t>(u)] >> v) & 1U)) {
        throw GraphError(ErrorCode::InvalidArgument, "asymmetric adjacency rows");
      }
    }
    g.rows_[static_cast<std::size_t>(v)] = r;
    degree_sum += std::popcount(r);
  }
  g.edges_ = degree_sum / 2;
  return g;
}

Graph Graph::with_label(std::string label) const {
  Graph copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

std::span<const std::uint64_t> Graph::word_rows() const {
  if (!fits_word()) throw GraphError(ErrorCode::OrderTooLarge, "graph order exceeds 64");
  return rows_;
}

std::span<const std::uint64_t> Graph::row(int v) const {
  check_vertex(v);
  return std::span<const std::uint64_t>(rows_).subspan(static_cast<std::size_t>(v) * words_,
                                                      static_cast<std::size_t>(words_));
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
}

int Graph::degree(int v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

int Graph::second_valency(int v) const {
  int total = 0;
  neighborhood(v).for_each([&](int w) { total += degree(w); });
  return total;
}

VertexSet Graph::neighborhood(int v) const {
  VertexSet s(n_);
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    for (std::uint64_t b = r[static_cast<std::size_t>(w)]; b; b &= b - 1) s.insert(w * 64 + __builtin_ctzll(b));
  }
  return s;
}

std::vector<int> Graph::neighbors(int v) const { return neighborhood(v).members(); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (int u = 0; u < n_; ++u) {
    neighborhood(u).for_each([&](int v) {
      if (u < v) out.push_back({u, v});
    });
  }
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = degree(v);
  return out;
}

int Graph::min_degree() const {
  auto d = degrees();
  return *std::min_element(d.begin(), d.end());
}

int Graph::max_degree() const {
  auto d = degrees();
  return *std::max_element(d.begin(), d.end());
}

VertexSet Subgraph::translate(const VertexSet& original) const {
  VertexSet out(graph.order());
  original.for_each([&](int v) {
    const int mapped = new_of_old.at(static_cast<std::size_t>(v));
    if (mapped >= 0) out.insert(mapped);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Neighbourhoods and distances

VertexSet closed_neighborhood(const Graph& g, const VertexSet& w) {
  if (w.universe() != g.order()) throw GraphError(ErrorCode::InvalidArgument, "vertex set universe mismatch");
  VertexSet out = w;
  w.for_each([&](int v) { out |= g.neighborhood(v); });
  return out;
}

VertexSet closed_neighborhood(const Graph& g, int v) {
  return closed_neighborhood(g, VertexSet(g.order(), {v}));
}

namespace {

// Breadth-first layers from source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    g.neighborhood(u).for_each([&](int w) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

}  // namespace

VertexSet vertices_at_distance(const Graph& g, int v, int k) {
  if (v < 0 || v >= g.order()) {
    throw GraphError(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
  }
  if (k < 0) throw GraphError(ErrorCode::InvalidArgument, "negative distance");
  VertexSet out(g.order());
  if (g.fits_word()) {
    // Bit-parallel layers.
    const auto rows = g.word_rows();
    std::uint64_t seen = std::uint64_t{1} << v;
    std::uint64_t frontier = seen;
    for (int layer = 0; layer < k && frontier; ++layer) {
      std::uint64_t next = 0;
      for (std::uint64_t b = frontier; b; b &= b - 1) next |= rows[static_cast<std::size_t>(__builtin_ctzll(b))];
      frontier = next & ~seen;
      seen |= frontier;
    }
    return VertexSet::from_word(g.order(), frontier);
  }
  const auto dist = bfs_distances(g, v);
  for (int u = 0; u < g.order(); ++u) {
    if (dist[static_cast<std::size_t>(u)] == k) out.insert(u);
  }
  return out;
}

std::optional<int> distance(const Graph& g, int u, int v) {
  if (v < 0 || v >= g.order() || u < 0 || u >= g.order()) {
    throw GraphError(ErrorCode::VertexOutOfRange, "vertex out of range");
  }
  const int d = bfs_distances(g, u)[static_cast<std::size_t>(v)];
  if (d < 0) return std::nullopt;
  return d;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (int s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    VertexSet comp(g.order());
    const auto dist = bfs_distances(g, s);
    for (int v = 0; v < g.order(); ++v) {
      if (dist[static_cast<std::size_t>(v)] >= 0) {
        comp.insert(v);
        seen[static_cast<std::size_t>(v)] = true;
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.fits_word()) {
    const auto rows = g.word_rows();
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t b = frontier; b; b &= b - 1) next |= rows[static_cast<std::size_t>(__builtin_ctzll(b))];
      frontier = next & ~seen;
      seen |= frontier;
    }
    return std::popcount(seen) == g.order();
  }
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

// ---------------------------------------------------------------------------
// Short cycles

bool is_triangle_free(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    const auto ru = g.row(u);
    bool found = false;
    g.neighborhood(u).for_each([&](int v) {
      if (found || v < u) return;
      const auto rv = g.row(v);
      for (std::size_t w = 0; w < ru.size(); ++w) {
        if (ru[w] & rv[w]) {
          found = true;
          return;
        }
      }
    });
    if (found) return false;
  }
  return true;
}

std::optional<int> girth(const Graph& g) {
  // Shortest cycle through each root via BFS: a non-tree edge between
  // layers closes a cycle of length dist(a) + dist(b) + 1.
  int best = -1;
  const int n = g.order();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{root};
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      const int du = dist[static_cast<std::size_t>(u)];
      if (best > 0 && 2 * du + 1 >= best) break;
      for (int w : g.neighbors(u)) {
        auto& dw = dist[static_cast<std::size_t>(w)];
        if (dw < 0) {
          dw = du + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        } else if (parent[static_cast<std::size_t>(u)] != w) {
          const int len = du + dw + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

bool is_short_cycle_avoiding(const Graph& g, int k) {
  const auto gi = girth(g);
  return !gi || *gi >= k + 1;
}

// ---------------------------------------------------------------------------
// Derived graphs

Subgraph induced(const Graph& g, const VertexSet& keep) {
  if (keep.universe() != g.order()) throw GraphError(ErrorCode::InvalidArgument, "vertex set universe mismatch");
  if (keep.empty()) throw GraphError(ErrorCode::EmptyGraph, "induced subgraph on no vertices");
  std::vector<int> old_of_new = keep.members();
  std::vector<int> new_of_old(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < old_of_new.size(); ++i) {
    new_of_old[static_cast<std::size_t>(old_of_new[i])] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < old_of_new.size(); ++i) {
    g.neighborhood(old_of_new[i]).for_each([&](int v) {
      const int j = new_of_old[static_cast<std::size_t>(v)];
      if (j > static_cast<int>(i)) edges.push_back({static_cast<int>(i), j});
    });
  }
  Graph sub = Graph::from_edges(static_cast<int>(old_of_new.size()), std::span<const Edge>(edges), g.label());
  return Subgraph{std::move(sub), std::move(new_of_old), std::move(old_of_new)};
}

Subgraph delete_vertices(const Graph& g, const VertexSet& remove) {
  if (remove.universe() != g.order()) throw GraphError(ErrorCode::InvalidArgument, "vertex set universe mismatch");
  const VertexSet keep = remove.complement();
  if (keep.empty()) throw GraphError(ErrorCode::EmptyGraph, "deleting every vertex leaves the empty graph");
  return induced(g, keep);
}

Graph delete_edges(const Graph& g, std::span<const Edge> remove) {
  std::vector<Edge> kept = g.edges();
  for (const Edge& e : remove) {
    if (!g.adjacent(e.u, e.v)) throw GraphError(ErrorCode::MissingEdge, "edge " + describe_edge(e) + " not in graph");
    const Edge canon{std::min(e.u, e.v), std::max(e.u, e.v)};
    kept.erase(std::remove(kept.begin(), kept.end(), canon), kept.end());
  }
  return Graph::from_edges(g.order(), kept, g.label());
}

Graph add_edge(const Graph& g, int u, int v) {
  if (u == v) throw GraphError(ErrorCode::LoopEdge, "loop edge " + describe_edge({u, v}));
  std::vector<Edge> edges = g.edges();
  edges.push_back({u, v});
  return Graph::from_edges(g.order(), edges, g.label());
}

Subgraph reduce_closed(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw GraphError(ErrorCode::InvalidArgument, "vertex set universe mismatch");
  s.for_each([&](int v) {
    if (g.neighborhood(v).intersects(s)) {
      throw GraphError(ErrorCode::NotIndependent, "reduction set is not independent (vertex " + std::to_string(v) + ")");
    }
  });
  const VertexSet removed = closed_neighborhood(g, s);
  if (removed.size() == g.order()) {
    throw GraphError(ErrorCode::GraphVanished, "closed neighbourhood covers every vertex");
  }
  return delete_vertices(g, removed);
}

Subgraph reduce_closed(const Graph& g, int v) { return reduce_closed(g, VertexSet(g.order(), {v})); }

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
  return Graph::from_edges(a.order() + b.order(), edges);
}

Graph permute(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw GraphError(ErrorCode::InvalidArgument, "permutation size mismatch");
  std::vector<bool> hit(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= g.order() || hit[static_cast<std::size_t>(p)]) {
      throw GraphError(ErrorCode::InvalidArgument, "not a permutation");
    }
    hit[static_cast<std::size_t>(p)] = true;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]});
  }
  return Graph::from_edges(g.order(), edges, g.label());
}

}  // namespace trifree
