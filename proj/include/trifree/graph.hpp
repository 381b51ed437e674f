#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace trifree {

enum class ErrorCode {
  InvalidArgument,
  VertexOutOfRange,
  LoopEdge,
  EmptyGraph,
  // reduce_closed removed every vertex; callers treat this as "graph vanished".
  GraphVanished,
  NotIndependent,
  MissingEdge,
  Parse,
  OrderTooLarge,
  Precondition,
};

const char* to_string(ErrorCode code);

class GraphError : public std::runtime_error {
 public:
  GraphError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// A subset of the vertex range 0..universe-1, one bit per vertex.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<int> members);
  VertexSet(int universe, std::span<const int> members);

  static VertexSet full(int universe);
  /// Builds a set over a universe of at most 64 vertices from a bit mask.
  static VertexSet from_word(int universe, std::uint64_t mask);

  int universe() const noexcept { return universe_; }
  bool contains(int v) const;
  void insert(int v);
  void erase(int v);
  int size() const noexcept;
  bool empty() const noexcept;
  std::vector<int> members() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  /// First word; the whole set when universe <= 64.
  std::uint64_t word() const noexcept { return words_.empty() ? 0 : words_[0]; }

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  VertexSet complement() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
        f(static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
      }
    }
  }

 private:
  void check(int v) const;
  void check_same(const VertexSet& other) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph on vertices 0..order-1.
///
/// Adjacency is kept as one fixed-width bit row per vertex. Graphs of order at
/// most 64 use a single machine word per row (the representation every
/// solver, the canonical labeller and the enumerator work on); larger graphs,
/// up to kMaxOrder, use multi-word rows and support the construction and
/// metric operations only.
class Graph {
 public:
  static constexpr int kWordOrder = 64;
  static constexpr int kMaxOrder = 4096;

  static Graph from_edges(int n, std::span<const Edge> edges, std::string label = {});
  static Graph from_edges(int n, std::initializer_list<Edge> edges, std::string label = {});
  /// Single-word rows; validates symmetry, empty diagonal and clean padding.
  static Graph from_rows(std::span<const std::uint64_t> rows, std::string label = {});

  int order() const noexcept { return n_; }
  int size() const noexcept { return edges_; }
  const std::string& label() const noexcept { return label_; }
  Graph with_label(std::string label) const;

  bool fits_word() const noexcept { return n_ <= kWordOrder; }
  /// Rows as single words; only valid when fits_word().
  std::span<const std::uint64_t> word_rows() const;
  std::span<const std::uint64_t> row(int v) const;
  int words_per_row() const noexcept { return words_; }

  bool adjacent(int u, int v) const;
  int degree(int v) const;
  /// Sum of the degrees of the neighbours of v.
  int second_valency(int v) const;
  VertexSet neighborhood(int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<Edge> edges() const;
  std::vector<int> degrees() const;
  int min_degree() const;
  int max_degree() const;

  /// Equality of vertex count and adjacency; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  Graph(int n, std::string label);
  void check_vertex(int v) const;
  void set_edge(int u, int v);

  int n_ = 0;
  int words_ = 0;
  int edges_ = 0;
  std::vector<std::uint64_t> rows_;
  std::string label_;
};

/// A graph produced by deleting vertices, with the vertex correspondence.
struct Subgraph {
  Graph graph;
  /// Index in graph for each original vertex, -1 if deleted.
  std::vector<int> new_of_old;
  /// Original vertex for each vertex of graph.
  std::vector<int> old_of_new;

  VertexSet translate(const VertexSet& original) const;
};

// Neighbourhoods and distances.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& w);
VertexSet closed_neighborhood(const Graph& g, int v);
VertexSet vertices_at_distance(const Graph& g, int v, int k);
std::optional<int> distance(const Graph& g, int u, int v);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

// Short cycles.
bool is_triangle_free(const Graph& g);
std::optional<int> girth(const Graph& g);
bool is_short_cycle_avoiding(const Graph& g, int k);

// Derived graphs.
Subgraph induced(const Graph& g, const VertexSet& keep);
Subgraph delete_vertices(const Graph& g, const VertexSet& remove);
Graph delete_edges(const Graph& g, std::span<const Edge> remove);
Graph add_edge(const Graph& g, int u, int v);
/// G_S: removes S and every neighbour of S. S must be independent.
Subgraph reduce_closed(const Graph& g, const VertexSet& s);
Subgraph reduce_closed(const Graph& g, int v);
/// Disjoint union; vertices of b follow those of a.
Graph disjoint_union(const Graph& a, const Graph& b);
/// Relabels vertex v to perm[v].
Graph permute(const Graph& g, std::span<const int> perm);

}  // namespace trifree
