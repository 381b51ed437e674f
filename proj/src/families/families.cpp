#include "trifree/families.hpp"

#include <array>

#include "trifree/canonical.hpp"

namespace trifree {

namespace {

// Adjacency-list builder so long chains avoid rebuilding bit rows per step.
class Builder {
 public:
  explicit Builder(int n) : adj_(static_cast<std::size_t>(n)) {}

  int add_vertex() {
    adj_.emplace_back();
    return static_cast<int>(adj_.size()) - 1;
  }
  void connect(int u, int v) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int order() const { return static_cast<int>(adj_.size()); }

  int lowest_bivalent(int from) const {
    for (int v = from; v < order(); ++v) {
      if (degree(v) == 2) return v;
    }
    throw GraphError(ErrorCode::Precondition, "no bivalent vertex to extend at");
  }

  void extend(int x) {
    const int y1 = neighbors(x)[0];
    const int y2 = neighbors(x)[1];
    const int v = add_vertex();
    const int w1 = add_vertex();
    const int w2 = add_vertex();
    connect(v, w1);
    connect(v, w2);
    connect(w1, x);
    connect(w2, y1);
    connect(w2, y2);
  }

  Graph build(std::string label, bool require_triangle_free = true) const {
    std::vector<Edge> edges;
    for (int u = 0; u < order(); ++u) {
      for (int v : neighbors(u)) {
        if (u < v) edges.push_back({u, v});
      }
    }
    Graph g = Graph::from_edges(order(), edges, std::move(label));
    if (require_triangle_free && !is_triangle_free(g)) throw GraphError(ErrorCode::Precondition, "family constructor produced a triangle");
    return g;
  }

 private:
  std::vector<std::vector<int>> adj_;
};

void require(bool ok, const char* what) {
  if (!ok) throw GraphError(ErrorCode::InvalidArgument, what);
}

Builder cycle_builder(int n) {
  Builder b(n);
  for (int i = 0; i < n; ++i) b.connect(i, (i + 1) % n);
  return b;
}

// Steps always pick the lowest bivalent vertex; the scan can start at the
// previous choice because earlier vertices never return to degree 2.
void extend_times(Builder& b, int steps) {
  int cursor = 0;
  for (int i = 0; i < steps; ++i) {
    cursor = b.lowest_bivalent(cursor);
    b.extend(cursor);
  }
}

Builder shackled_base() {
  Builder b = cycle_builder(5);
  extend_times(b, 1);
  // Ch_3 has bivalent vertices 2, 3, 5, 6 with edges 2-3 and 5-6; pairing
  // 2 with 5 puts the shackle across the chain as in the standard drawing.
  const int v = b.add_vertex();
  const int w1 = b.add_vertex();
  const int w2 = b.add_vertex();
  b.connect(v, w1);
  b.connect(v, w2);
  b.connect(w1, 2);
  b.connect(w1, 5);
  b.connect(w2, 3);
  b.connect(w2, 6);
  return b;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Chain: return "chain";
    case Family::Bicycle: return "bicycle";
    case Family::ShackledChain: return "shackled_chain";
    case Family::W5: return "w5";
    case Family::GP72: return "gp72";
    case Family::CycleN: return "cycle";
    case Family::S1: return "s1";
    case Family::S2: return "s2";
  }
  return "?";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (Family f : {Family::Chain, Family::Bicycle, Family::ShackledChain, Family::W5, Family::GP72, Family::CycleN,
                   Family::S1, Family::S2}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::string member_name(Family f, std::optional<int> parameter) {
  const std::string k = parameter ? std::to_string(*parameter) : std::string();
  switch (f) {
    case Family::Chain: return "Ch_" + k;
    case Family::Bicycle: return "BC_" + k;
    case Family::ShackledChain: return "SCh_" + k;
    case Family::W5: return "W5";
    case Family::GP72: return "GP72";
    case Family::CycleN: return "C" + k;
    case Family::S1: return "S1";
    case Family::S2: return "S2";
  }
  return "?";
}

Graph chain(int k) {
  require(k >= 2, "chain needs k >= 2");
  require(3 * k - 1 <= Graph::kMaxOrder, "chain order exceeds the supported maximum");
  Builder b = cycle_builder(5);
  extend_times(b, k - 2);
  return b.build(member_name(Family::Chain, k));
}

Graph bicycle(int k) {
  require(k >= 4, "bicycle needs k >= 4");
  require(3 * k <= Graph::kMaxOrder, "bicycle order exceeds the supported maximum");
  const int outer = 2 * k;
  Builder b(3 * k);
  auto c = [&](int j) { return ((j - 1) % outer + outer) % outer; };  // c_j, j taken mod 2k
  auto d = [&](int i) { return outer + (i - 1) % k; };
  for (int j = 1; j <= outer; ++j) b.connect(c(j), c(j + 1));
  for (int i = 1; i <= k; ++i) {
    b.connect(d(i), d(i + 1));
    b.connect(d(i), c(2 * i - 2));
    b.connect(d(i), c(2 * i + 1));
  }
  return b.build(member_name(Family::Bicycle, k));
}

Graph shackled_chain(int k) {
  require(k >= 1, "shackled chain needs k >= 1");
  require(3 * k + 8 <= Graph::kMaxOrder, "shackled chain order exceeds the supported maximum");
  Builder b = shackled_base();
  extend_times(b, k - 1);
  return b.build(member_name(Family::ShackledChain, k));
}

Graph w5() {
  Builder b(14);
  const int a[2] = {0, 1};
  auto bv = [](int i) { return 2 + i; };
  auto cv = [](int j) { return 6 + (j % 8); };
  b.connect(a[0], a[1]);
  for (int j = 0; j < 8; ++j) b.connect(cv(j), cv(j + 1));
  for (int i = 0; i < 4; ++i) {
    b.connect(bv(i), a[i % 2]);
    b.connect(bv(i), cv(2 * i));
    b.connect(bv(i), cv(2 * i + 3));
  }
  return b.build("W5");
}

Graph gp72() {
  Builder b(14);
  for (int i = 0; i < 7; ++i) {
    b.connect(i, (i + 1) % 7);
    b.connect(7 + i, 7 + (i + 1) % 7);
    b.connect(7 + i, (2 * i) % 7);
  }
  return b.build("GP72");
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  require(n <= Graph::kMaxOrder, "cycle order exceeds the supported maximum");
  return cycle_builder(n).build(member_name(Family::CycleN, n), n > 3);
}

Graph s1() {
  Builder b = cycle_builder(12);
  b.connect(0, 6);
  return b.build("S1");
}

Graph s2() {
  Builder b = cycle_builder(12);
  b.connect(0, 6);
  b.connect(3, 9);
  return b.build("S2");
}

std::vector<int> bivalent_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 2) out.push_back(v);
  }
  return out;
}

Graph extend_at(const Graph& g, int x) {
  if (g.degree(x) != 2) throw GraphError(ErrorCode::Precondition, "extension vertex must be bivalent");
  const int n = g.order();
  std::vector<Edge> edges = g.edges();
  const auto y = g.neighbors(x);
  edges.push_back({n, n + 1});
  edges.push_back({n, n + 2});
  edges.push_back({n + 1, x});
  edges.push_back({n + 2, y[0]});
  edges.push_back({n + 2, y[1]});
  return Graph::from_edges(n + 3, edges, g.label());
}

Graph shackle(const Graph& ch3, int a1, int a2, int b1, int b2) {
  for (int x : {a1, a2, b1, b2}) {
    if (ch3.degree(x) != 2) throw GraphError(ErrorCode::Precondition, "shackle endpoints must be bivalent");
  }
  if (!ch3.adjacent(a1, a2) || !ch3.adjacent(b1, b2)) throw GraphError(ErrorCode::Precondition, "shackle endpoints must form two edges");
  const int n = ch3.order();
  std::vector<Edge> edges = ch3.edges();
  for (Edge e : {Edge{n, n + 1}, Edge{n, n + 2}, Edge{n + 1, a1}, Edge{n + 1, b1}, Edge{n + 2, a2}, Edge{n + 2, b2}}) {
    edges.push_back(e);
  }
  return Graph::from_edges(n + 3, edges, ch3.label());
}

Graph build(Family f, std::optional<int> parameter) {
  auto k = [&] {
    if (!parameter) throw GraphError(ErrorCode::InvalidArgument, std::string(to_string(f)) + " needs a parameter");
    return *parameter;
  };
  switch (f) {
    case Family::Chain: return chain(k());
    case Family::Bicycle: return bicycle(k());
    case Family::ShackledChain: return shackled_chain(k());
    case Family::W5: return w5();
    case Family::GP72: return gp72();
    case Family::CycleN: return cycle(k());
    case Family::S1: return s1();
    case Family::S2: return s2();
  }
  throw GraphError(ErrorCode::InvalidArgument, "unknown family");
}

namespace {

std::optional<FamilyMember> match(const Graph& g, const std::vector<std::pair<Family, std::optional<int>>>& candidates) {
  std::optional<std::string> cert;
  for (const auto& [f, k] : candidates) {
    Graph h = build(f, k);
    if (h.order() != g.order() || h.size() != g.size()) continue;
    if (!cert) cert = certificate(g);
    if (certificate(h) == *cert) return FamilyMember{f, k, std::move(h)};
  }
  return std::nullopt;
}

std::vector<std::pair<Family, std::optional<int>>> g_candidates(int n) {
  std::vector<std::pair<Family, std::optional<int>>> out;
  if (n >= 5 && (n + 1) % 3 == 0) out.push_back({Family::Chain, (n + 1) / 3});
  if (n >= 15 && n % 3 == 0) out.push_back({Family::Bicycle, n / 3});
  if (n == 14) {
    out.push_back({Family::W5, std::nullopt});
    out.push_back({Family::GP72, std::nullopt});
  }
  return out;
}

}  // namespace

std::optional<FamilyMember> classify_in_G(const Graph& g) {
  if (!g.fits_word()) throw GraphError(ErrorCode::OrderTooLarge, "classification needs n <= 64");
  return match(g, g_candidates(g.order()));
}

std::optional<FamilyMember> classify_chain_like(const Graph& g) {
  if (!g.fits_word()) throw GraphError(ErrorCode::OrderTooLarge, "classification needs n <= 64");
  auto candidates = g_candidates(g.order());
  if (g.order() >= 11 && (g.order() - 8) % 3 == 0) candidates.push_back({Family::ShackledChain, (g.order() - 8) / 3});
  return match(g, candidates);
}

std::optional<ClosedForm> closed_form(Family f, std::optional<int> parameter) {
  const int k = parameter.value_or(0);
  switch (f) {
    case Family::Chain:
      if (k >= 2) return ClosedForm{3 * k - 1, 5 * k - 5, k, k - 2, 0};
      break;
    case Family::Bicycle:
      if (k >= 5) return ClosedForm{3 * k, 5 * k, k, k, 0};
      // One extra 4-cycle at k = 4 lifts ν to 1 (so N(C4) = 5).
      if (k == 4) return ClosedForm{12, 20, 4, 5, 1};
      break;
    case Family::ShackledChain:
      if (k >= 1) return ClosedForm{3 * k + 8, 5 * k + 11, k + 3, k, 2};
      break;
    case Family::W5:
    case Family::GP72:
      return ClosedForm{14, 21, 5, 0, 0};
    default:
      break;
  }
  return std::nullopt;
}

std::vector<InvariantRecord> family_table(int k_max) {
  if (k_max < 2) throw GraphError(ErrorCode::InvalidArgument, "family table needs k_max >= 2");
  std::vector<std::pair<Family, std::optional<int>>> members;
  for (int k = 2; k <= k_max; ++k) members.push_back({Family::Chain, k});
  for (int k = 4; k <= k_max; ++k) members.push_back({Family::Bicycle, k});
  for (int k = 1; k <= k_max; ++k) members.push_back({Family::ShackledChain, k});
  members.push_back({Family::W5, std::nullopt});
  members.push_back({Family::GP72, std::nullopt});

  std::vector<InvariantRecord> table;
  for (const auto& [f, k] : members) {
    InvariantRecord r = invariants(build(f, k));
    const ClosedForm expect = *closed_form(f, k);
    if (r.n != expect.n || r.e != expect.e || r.alpha != expect.alpha || r.c4 != expect.c4 || r.nu != expect.nu) {
      throw GraphError(ErrorCode::Precondition, "closed-form mismatch for " + r.name);
    }
    table.push_back(std::move(r));
  }
  return table;
}

}  // namespace trifree
