#include <algorithm>
#include <functional>
#include <optional>

#include "mask_graph.hpp"
#include "trifree/analysis.hpp"
#include "trifree/enumerate.hpp"
#include "trifree/families.hpp"
#include "trifree/graph6.hpp"
#include "trifree/verify.hpp"

namespace trifree {
namespace {

using namespace verify_detail;

// Induced-subgraph lemmas visit every vertex subset; they run on the
// enumerated graphs up to this order only.
constexpr int kSubsetLemmaMaxOrder = 8;

std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

std::string vtx(int v) { return "v=" + std::to_string(v); }

class Ctx {
 public:
  Ctx(const Graph& graph, bool from_family) : g(graph), m(graph), family(from_family) {
    n = g.order();
    e = g.size();
    alpha = m.alpha(m.all);
    c4 = m.c4(m.all);
    nu = nu_value(n, e, alpha, c4);
    deg.resize(static_cast<std::size_t>(n));
    d2.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = count(m.nbhd(v));
    mindeg = n;
    maxdeg = 0;
    for (int v = 0; v < n; ++v) {
      int s = 0;
      for_each_bit(m.nbhd(v), [&](int w) { s += d(w); });
      d2[static_cast<std::size_t>(v)] = s;
      mindeg = std::min(mindeg, d(v));
      maxdeg = std::max(maxdeg, d(v));
      if (d(v) == 2) bivalent |= bit(v);
    }
    connected = m.connected(m.all);
  }

  int d(int v) const { return deg[static_cast<std::size_t>(v)]; }
  int sv(int v) const { return d2[static_cast<std::size_t>(v)]; }
  Mask gv(int v) const { return m.all & ~m.closed(v); }

  std::int64_t c4_at(int v) {
    if (!c4_through_) {
      c4_through_.emplace(static_cast<std::size_t>(n));
      kernels::c4_through(m.rows, *c4_through_, m.all);
    }
    return (*c4_through_)[static_cast<std::size_t>(v)];
  }
  /// 4-cycles with at least one vertex in s.
  std::int64_t c4_meeting(Mask s) const { return c4 - m.c4(m.all & ~s); }

  std::int64_t c5_at(int v) {
    if (!c5_through_) c5_through_ = count_cycles(g, 5).through;
    return (*c5_through_)[static_cast<std::size_t>(v)];
  }

  bool edge_critical() {
    if (!edge_critical_) {
      bool critical = true;
      for (int u = 0; u < n && critical; ++u) {
        for_each_bit(m.nbhd(u) & ~((bit(u) << 1) - 1), [&](int v) {
          if (critical && m.redundant(m.all, alpha, u, v)) critical = false;
        });
      }
      edge_critical_ = critical;
    }
    return *edge_critical_;
  }

  bool has_c5_component() const {
    for (Mask c : m.components(m.all)) {
      if (count(c) == 5 && m.edges(c) == 5) return true;
    }
    return false;
  }

  /// Family member recognition for connected graphs (chains, shackled
  /// chains and the ν = 0 family).
  const std::optional<FamilyMember>& chain_like() {
    if (!chain_like_done_) {
      chain_like_ = classify_chain_like(g);
      chain_like_done_ = true;
    }
    return chain_like_;
  }
  bool is_chain(int min_k) {
    const auto& f = chain_like();
    return f && f->family == Family::Chain && f->parameter && *f->parameter >= min_k;
  }

  /// A destabiliser of G[universe] of size exactly r, if any. Sets equal to
  /// the whole universe are not considered.
  std::optional<Mask> destabiliser_of_size(Mask universe, int r) const {
    std::optional<Mask> found;
    if (r >= count(universe)) return found;
    const int a = m.alpha(universe);
    for_each_submask_of_size(universe, r, [&](Mask s) {
      if (!found && m.destabilises(universe, s, a)) found = s;
    });
    return found;
  }

  const Graph& g;
  MaskGraph m;
  bool family;
  int n = 0;
  int e = 0;
  int alpha = 0;
  std::int64_t c4 = 0;
  std::int64_t nu = 0;
  int mindeg = 0;
  int maxdeg = 0;
  Mask bivalent = 0;
  bool connected = false;
  std::vector<int> deg;
  std::vector<int> d2;

 private:
  std::optional<std::vector<std::int64_t>> c4_through_;
  std::optional<std::vector<std::int64_t>> c5_through_;
  std::optional<bool> edge_critical_;
  std::optional<FamilyMember> chain_like_;
  bool chain_like_done_ = false;
};

struct Outcome {
  bool skipped = false;
  bool hit = false;
  std::vector<std::string> failures;

  void fail(std::string detail) { failures.push_back(std::move(detail)); }
  void check(bool ok, const std::function<std::string()>& detail) {
    if (!ok) fail(detail());
  }
};

std::string nu_text(const Ctx& c) { return "nu=" + std::to_string(c.nu); }

// ---------------------------------------------------------------------------
// Small-ν consequences.

void prop_edge_critical(Ctx& c, Outcome& o) {
  if (c.nu > 2) return;
  o.hit = true;
  o.check(c.edge_critical(), [&] { return nu_text(c) + " but an edge is redundant"; });
}

void prop_mindeg1(Ctx& c, Outcome& o) {
  if (c.nu > 17) return;
  o.hit = true;
  o.check(c.mindeg >= 1, [&] { return nu_text(c) + ", isolated vertex"; });
  if (auto s = c.destabiliser_of_size(c.m.all, 1)) o.fail(nu_text(c) + ", destabiliser " + describe(*s));
}

void prop_mindeg2(Ctx& c, Outcome& o) {
  if (c.nu > 3) return;
  o.hit = true;
  o.check(c.mindeg >= 2, [&] { return nu_text(c) + ", mindeg=" + std::to_string(c.mindeg); });
}

void mindegleq4(Ctx& c, Outcome& o) {
  if (c.nu > 7) return;
  o.hit = true;
  o.check(c.mindeg <= 4, [&] { return nu_text(c) + ", mindeg=" + std::to_string(c.mindeg); });
}

void prop1(Ctx& c, Outcome& o) {
  if (c.nu > 3) return;
  o.hit = true;
  if (auto s = c.destabiliser_of_size(c.m.all, std::min(2, c.n - 1))) o.fail(nu_text(c) + ", destabiliser " + describe(*s));
}

bool is_k2_component(const Ctx& c, Mask s) {
  if (count(s) != 2) return false;
  const int u = std::countr_zero(s);
  const int v = 63 - std::countl_zero(s);
  return c.m.nbhd(u) == bit(v) && c.m.nbhd(v) == bit(u);
}

void prop_leq6(Ctx& c, Outcome& o) {
  if (c.nu > 6) return;
  o.hit = true;
  if (c.mindeg >= 2) return;
  bool ok = false;
  if (c.edge_critical()) {
    for (Mask comp : c.m.components(c.m.all)) {
      if (is_k2_component(c, comp) && c.m.nu(c.m.all & ~comp) <= 2) ok = true;
    }
  }
  o.check(ok, [&] { return nu_text(c) + ", mindeg<2 without a K2 split"; });
}

void prop2(Ctx& c, Outcome& o) {
  if (c.nu > 6) return;
  o.hit = true;
  // Destabilising is inherited by supersets, so listing all sets of size
  // <= 2 also finds every size-2 set containing a size-1 destabiliser.
  std::vector<Mask> sets;
  for (int r = 1; r <= std::min(2, c.n - 1); ++r) {
    for_each_submask_of_size(c.m.all, r, [&](Mask s) {
      if (c.m.destabilises(c.m.all, s, c.alpha)) sets.push_back(s);
    });
  }
  if (sets.empty()) return;
  o.check(sets.size() == 1 && is_k2_component(c, sets[0]),
          [&] { return nu_text(c) + ", destabiliser " + describe(sets[0]) + " of " + std::to_string(sets.size()); });
}

void prop3(Ctx& c, Outcome& o) {
  if (c.nu > 4 || c.mindeg < 3) return;
  o.hit = true;
  if (auto s = c.destabiliser_of_size(c.m.all, std::min(3, c.n - 1))) o.fail(nu_text(c) + ", destabiliser " + describe(*s));
}

void prop4(Ctx& c, Outcome& o) {
  for (int v = 0; v < c.n; ++v) {
    const Mask gv = c.gv(v);
    if (gv != 0 && c.m.destabilises(gv, c.m.second(v))) continue;
    o.hit = true;
    const std::int64_t bound = 3LL * c.mindeg * c.d(v) + 18LL * c.d(v) - 17;
    o.check(c.nu >= bound, [&] { return vtx(v) + ": " + nu_text(c) + " < " + std::to_string(bound); });
  }
}

void prop_no2regular(Ctx& c, Outcome& o) {
  if (c.nu > 6) return;
  o.hit = true;
  for (Mask comp : c.m.components(c.m.all)) {
    bool two_regular = count(comp) >= 3;
    for_each_bit(comp, [&](int v) { two_regular = two_regular && c.d(v) == 2; });
    if (two_regular && count(comp) != 5) o.fail(nu_text(c) + ", C" + std::to_string(count(comp)) + " component");
  }
}

void no3regular(Ctx& c, Outcome& o) {
  if (c.nu > 0) return;
  o.hit = true;
  for (Mask comp : c.m.components(c.m.all)) {
    bool cubic = true;
    for_each_bit(comp, [&](int v) { cubic = cubic && c.d(v) == 3; });
    if (!cubic) continue;
    const Graph h = induced(c.g, VertexSet::from_word(c.n, comp)).graph;
    const auto f = classify_in_G(h);
    o.check(f && (f->family == Family::W5 || f->family == Family::GP72),
            [&] { return "cubic component " + describe(comp) + " is neither W5 nor GP72"; });
  }
}

// Bivalent-vertex structure at ν <= 2 without C5 components.
template <class F>
void for_tretton_vertices(Ctx& c, F&& f) {
  if (c.nu > 2 || c.bivalent == 0 || c.has_c5_component()) return;
  for_each_bit(c.bivalent, f);
}

void tretton_i(Ctx& c, Outcome& o) {
  for_tretton_vertices(c, [&](int v) {
    o.hit = true;
    const int s = c.sv(v);
    o.check(s >= 5 && s <= 6 && (c.nu > 1 || s == 5),
            [&] { return vtx(v) + ": " + nu_text(c) + ", d2=" + std::to_string(s); });
  });
}

void tretton_ii(Ctx& c, Outcome& o) {
  for_tretton_vertices(c, [&](int v) {
    const Mask gv = c.gv(v);
    if (gv == 0) return;
    o.hit = true;
    int delta = c.n;
    for_each_bit(gv, [&](int x) { delta = std::min(delta, c.m.degree_in(x, gv)); });
    o.check(delta >= 2 && (c.nu > 1 || delta == 2),
            [&] { return vtx(v) + ": " + nu_text(c) + ", mindeg(G_v)=" + std::to_string(delta); });
  });
}

void tretton_iii(Ctx& c, Outcome& o) {
  for_tretton_vertices(c, [&](int v) {
    if (c.sv(v) != 5) return;
    o.hit = true;
    o.check(c.c4_at(v) == 0, [&] { return vtx(v) + ": " + std::to_string(c.c4_at(v)) + " 4-cycles through v"; });
  });
}

void tretton_iv(Ctx& c, Outcome& o) {
  for_tretton_vertices(c, [&](int v) {
    if (c.sv(v) != 6) return;
    o.hit = true;
    const std::int64_t k = c.c4_meeting(c.m.nbhd(v));
    o.check(k == 0, [&] { return vtx(v) + ": " + std::to_string(k) + " 4-cycles meet N(v)"; });
  });
}

void kor1(Ctx& c, Outcome& o) {
  if (!c.connected || c.nu > 2) return;
  bool any = false;
  for_each_bit(c.bivalent, [&](int v) { any = any || c.sv(v) == 4; });
  if (!any) return;
  o.hit = true;
  o.check(c.n == 5 && c.e == 5, [&] { return nu_text(c) + ", bivalent vertex with d2=4 but not C5"; });
}

void ddestab(Ctx& c, Outcome& o) {
  if (c.nu > 2) return;
  for_each_bit(c.bivalent, [&](int v) {
    if (c.sv(v) != 6) return;
    o.hit = true;
    const Mask gv = c.gv(v);
    const Mask n2 = c.m.second(v);
    const int a = c.m.alpha(gv);
    bool ok = count(n2) == 4 && c.m.destabilises(gv, n2, a);
    for_each_bit(n2, [&](int x) { ok = ok && !c.m.destabilises(gv, n2 & ~bit(x), a); });
    o.check(ok, [&] { return vtx(v) + ": N2=" + describe(n2) + " is not a minimal size-4 destabiliser"; });
  });
}

template <class F>
void for_balanced_d2_5_pairs(Ctx& c, F&& f) {
  if (!c.connected) return;
  for_each_bit(c.bivalent, [&](int v1) {
    if (c.sv(v1) != 5) return;
    for_each_bit(c.m.nbhd(v1) & c.bivalent & ~((bit(v1) << 1) - 1), [&](int v2) {
      if (c.sv(v2) == 5) f(v1, v2);
    });
  });
}

void contains_chk2_i(Ctx& c, Outcome& o) {
  if (c.nu > 1) return;
  bool any = false;
  for_balanced_d2_5_pairs(c, [&](int, int) { any = true; });
  if (!any) return;
  o.hit = true;
  o.check(c.is_chain(3), [&] { return nu_text(c) + ", not a chain"; });
}

void contains_chk2_ii(Ctx& c, Outcome& o) {
  if (c.nu > 2) return;
  for_balanced_d2_5_pairs(c, [&](int v1, int v2) {
    o.hit = true;
    o.check(c.c5_at(v1) == 2 && c.c5_at(v2) == 2, [&] {
      return vtx(v1) + "," + std::to_string(v2) + ": 5-cycles " + std::to_string(c.c5_at(v1)) + "," +
             std::to_string(c.c5_at(v2));
    });
  });
}

void contains_chk1(Ctx& c, Outcome& o) {
  if (!c.connected || c.mindeg != 2 || c.nu > 1) return;
  o.hit = true;
  o.check(c.is_chain(2), [&] { return nu_text(c) + ", not a chain"; });
}

bool in_extremal_family(Ctx& c) {
  return c.connected && classify_in_G(c.g).has_value();
}

void mindeg3(Ctx& c, Outcome& o) {
  if (!c.connected || c.nu > 0 || in_extremal_family(c)) return;
  o.hit = true;
  o.check(c.mindeg >= 3, [&] { return nu_text(c) + ", mindeg=" + std::to_string(c.mindeg); });
}

void balancedpair(Ctx& c, Outcome& o) {
  if (c.nu > 2) return;
  for_each_bit(c.bivalent, [&](int v) {
    for_each_bit(c.m.nbhd(v) & c.bivalent, [&](int u) {
      o.hit = true;
      o.check(c.sv(v) == c.sv(u), [&] { return vtx(v) + ", u=" + std::to_string(u) + ": unequal second valency"; });
    });
  });
}

void classprop1(Ctx& c, Outcome& o) {
  if (!c.connected || c.nu > 2 || c.mindeg != 2) return;
  o.hit = true;
  const auto& f = c.chain_like();
  o.check(f && (f->family == Family::Chain || f->family == Family::ShackledChain),
          [&] { return nu_text(c) + ", neither a chain nor a shackled chain"; });
}

void classprop2(Ctx& c, Outcome& o) {
  if (!c.connected || c.nu > 0 || c.mindeg != 3) return;
  bool any = false;
  for (int v = 0; v < c.n; ++v) any = any || (c.d(v) == 3 && c.c4_at(v) > 0);
  if (!any) return;
  o.hit = true;
  const auto f = classify_in_G(c.g);
  o.check(f && f->family == Family::Bicycle && f->parameter && *f->parameter >= 5,
          [&] { return std::string("trivalent vertex on a 4-cycle, not a bicycle"); });
}

void classprop6(Ctx& c, Outcome& o) {
  if (!c.connected || c.nu > 0) return;
  o.hit = true;
  const auto f = classify_in_G(c.g);
  const bool is_chain = f && f->family == Family::Chain;
  const bool is_bicycle = f && f->family == Family::Bicycle && f->parameter && *f->parameter >= 5;
  const bool is_c5 = c.n == 5 && c.e == 5;
  const bool no_c4 = c.c4 == 0 && !is_c5;
  o.check(int{is_chain} + int{is_bicycle} + int{no_c4} == 1,
          [&] { return "matches " + std::to_string(int{is_chain} + int{is_bicycle} + int{no_c4}) + " cases"; });
}

void classprop10(Ctx& c, Outcome& o) {
  if (!c.connected || c.nu > 0 || in_extremal_family(c)) return;
  o.hit = true;
  o.check(c.mindeg == 4 && c.maxdeg == 4, [&] { return std::string("not 4-regular"); });
}

// ---------------------------------------------------------------------------
// Edge-critical graphs.

void ecalpha(Ctx& c, Outcome& o) {
  if (!c.edge_critical()) return;
  o.hit = true;
  for (int v = 0; v < c.n; ++v) {
    const int a = c.m.alpha(c.gv(v));
    o.check(a == c.alpha - 1, [&] { return vtx(v) + ": alpha(G_v)=" + std::to_string(a); });
  }
}

void ecmindeg(Ctx& c, Outcome& o) {
  // Every component of an edge-critical graph is edge-critical, so the
  // statement is checked per component: K1, K2, or minimum degree >= 2.
  if (!c.edge_critical()) return;
  o.hit = true;
  for (Mask comp : c.m.components(c.m.all)) {
    if (count(comp) <= 2) continue;
    for_each_bit(comp, [&](int v) {
      o.check(c.d(v) >= 2, [&] { return vtx(v) + ": degree " + std::to_string(c.d(v)); });
    });
  }
}

void ecbvconn(Ctx& c, Outcome& o) {
  if (!c.connected || c.bivalent == 0 || !c.edge_critical()) return;
  o.hit = true;
  for_each_bit(c.bivalent, [&](int v) {
    o.check(c.m.connected(c.gv(v)), [&] { return vtx(v) + ": G_v disconnected"; });
  });
}

void ecdestab(Ctx& c, Outcome& o) {
  if (!c.connected || c.maxdeg < 2 || !c.edge_critical()) return;
  o.hit = true;
  for (int v = 0; v < c.n; ++v) {
    if (c.d(v) < 2) continue;
    o.check(c.m.destabilises(c.gv(v), c.m.second(v)), [&] { return vtx(v) + ": N2 does not destabilise G_v"; });
  }
}

void gv_destabiliser(Ctx& c, Outcome& o) {
  if (!c.edge_critical()) return;
  for (int r = 1; r <= std::min(3, c.n - 1); ++r) {
    for_each_submask_of_size(c.m.all, r, [&](Mask s) {
      if (!c.m.destabilises(c.m.all, s, c.alpha)) return;
      for_each_bit(c.m.all & ~s, [&](int v) {
        const Mask gv = c.gv(v);
        if (gv == 0) return;
        o.hit = true;
        o.check(c.m.destabilises(gv, s & gv),
                [&] { return "S=" + describe(s) + ", " + vtx(v) + ": S does not destabilise G_v"; });
      });
    });
  }
}

// ---------------------------------------------------------------------------
// Identities and bounds that hold for every triangle-free graph.

void lemma_alpha(Ctx& c, Outcome& o) {
  for (int v = 0; v < c.n; ++v) {
    const Mask gv = c.gv(v);
    const int a = c.m.alpha(gv);
    if (gv != 0 && c.m.destabilises(gv, c.m.second(v), a)) continue;
    o.hit = true;
    o.check(c.alpha >= a + c.d(v), [&] { return vtx(v) + ": alpha=" + std::to_string(c.alpha); });
  }
}

void redundant_edge_persistence(Ctx& c, Outcome& o) {
  for (int u = 0; u < c.n; ++u) {
    for_each_bit(c.m.nbhd(u) & ~((bit(u) << 1) - 1), [&](int v) {
      if (!c.m.redundant(c.m.all, c.alpha, u, v)) return;
      for_each_bit(c.m.all & ~(c.m.closed(u) | c.m.closed(v)), [&](int x) {
        o.hit = true;
        const Mask gx = c.gv(x);
        const int ax = c.m.alpha(gx);
        o.check(ax <= c.alpha - 2 || c.m.redundant(gx, ax, u, v), [&] {
          return "edge " + std::to_string(u) + "-" + std::to_string(v) + ", x=" + std::to_string(x) + ": critical in G_x";
        });
      });
    });
  }
}

void e2_identity(Ctx& c, Outcome& o) {
  auto e2 = [&](Mask mk) {
    std::int64_t s = 0;
    for_each_bit(mk, [&](int x) { s += static_cast<std::int64_t>(c.m.degree_in(x, mk)) * c.m.degree_in(x, mk); });
    return s / 2;
  };
  const std::int64_t whole = e2(c.m.all);
  for (int v = 0; v < c.n; ++v) {
    o.hit = true;
    std::int64_t rhs = -choose2(c.d(v)) - c.c4_at(v);
    for_each_bit(c.m.nbhd(v), [&](int w) { rhs += c.sv(w) + choose2(c.d(w)); });
    const std::int64_t lhs = whole - e2(c.gv(v));
    o.check(lhs == rhs, [&] { return vtx(v) + ": " + std::to_string(lhs) + " != " + std::to_string(rhs); });
  }
}

void removal_count(Ctx& c, Outcome& o) {
  for (int v = 0; v < c.n; ++v) {
    o.hit = true;
    const std::int64_t lhs = c.m.nu(c.gv(v));
    const std::int64_t rhs = c.nu - 3LL * c.sv(v) + 17LL * c.d(v) - 18 - c.c4_meeting(c.m.nbhd(v));
    o.check(lhs <= rhs, [&] { return vtx(v) + ": " + std::to_string(lhs) + " > " + std::to_string(rhs); });
  }
}

void nbrsincycle(Ctx& c, Outcome& o) {
  if (c.c4 != 0) return;
  for (int k = 5; k <= std::min(kMaxCycleLength, c.n); ++k) {
    for_each_cycle(c.g, k, [&](std::span<const int> cyc) {
      o.hit = true;
      Mask cm = 0;
      for (int x : cyc) cm |= bit(x);
      for_each_bit(c.m.all & ~cm, [&](int v) {
        const int hits = count(c.m.nbhd(v) & cm);
        o.check(hits <= k / 3, [&] { return vtx(v) + ": " + std::to_string(hits) + " neighbours on a " + std::to_string(k) + "-cycle"; });
      });
    });
  }
}

// Attachment sets: for an induced subgraph H, the vertices of H with a
// neighbour outside H.
template <class F>
void for_each_induced_part(Ctx& c, Outcome& o, F&& f) {
  if (c.family || c.n > kSubsetLemmaMaxOrder) {
    o.skipped = true;
    return;
  }
  for (Mask h = 1; h < c.m.all; ++h) {
    Mask attach = 0;
    int crossing = 0;
    for_each_bit(h, [&](int x) {
      const Mask out = c.m.nbhd(x) & ~h;
      if (out != 0) attach |= bit(x);
      crossing += count(out);
    });
    if (crossing > 0) f(h, attach, crossing);
  }
}

bool crossing_edges_redundant(Ctx& c, Mask h, std::string& bad) {
  bool ok = true;
  for_each_bit(h, [&](int x) {
    for_each_bit(c.m.nbhd(x) & ~h, [&](int y) {
      if (ok && !c.m.redundant(c.m.all, c.alpha, x, y)) {
        ok = false;
        bad = std::to_string(x) + "-" + std::to_string(y);
      }
    });
  });
  return ok;
}

void lemma_a(Ctx& c, Outcome& o) {
  for_each_induced_part(c, o, [&](Mask h, Mask attach, int) {
    if (c.m.destabilises(h, attach)) return;
    o.hit = true;
    std::string bad;
    if (!crossing_edges_redundant(c, h, bad)) o.fail("H=" + describe(h) + ": crossing edge " + bad + " is critical");
  });
}

void corollary_a(Ctx& c, Outcome& o) {
  for_each_induced_part(c, o, [&](Mask h, Mask, int crossing) {
    if (crossing >= count(h) || c.destabiliser_of_size(h, crossing)) return;
    o.hit = true;
    std::string bad;
    if (!crossing_edges_redundant(c, h, bad)) o.fail("H=" + describe(h) + ": crossing edge " + bad + " is critical");
  });
}

struct Property {
  const char* id;
  void (*check)(Ctx&, Outcome&);
  const char* note;
};

const Property kProperties[] = {
    {"prop-edge-critical", prop_edge_critical, ""},
    {"prop-mindeg1", prop_mindeg1, ""},
    {"prop-mindeg2", prop_mindeg2, ""},
    {"mindegleq4", mindegleq4, ""},
    {"prop1", prop1, ""},
    {"prop-leq6", prop_leq6, ""},
    {"prop2", prop2, ""},
    {"prop3", prop3,
     "minimum degree >= 3 with nu <= 4 needs order >= 14 (W5, GP72, bicycles); hits come from the family supplement"},
    {"prop4", prop4, "hits: graphs with a vertex whose N2(v) does not destabilise G_v"},
    {"prop-no2regular", prop_no2regular, ""},
    {"no3regular", no3regular, ""},
    {"tretton.i", tretton_i, ""},
    {"tretton.ii", tretton_ii, "equality is asserted when G_v is non-empty"},
    {"tretton.iii", tretton_iii, ""},
    {"tretton.iv", tretton_iv, ""},
    {"kor1", kor1, ""},
    {"ddestab", ddestab, ""},
    {"containsChk2.i", contains_chk2_i, ""},
    {"containsChk2.ii", contains_chk2_ii, ""},
    {"containsChk1", contains_chk1, ""},
    {"mindeg3", mindeg3, "vacuous: every connected graph with nu <= 0 is an extremal family member"},
    {"balancedpair", balancedpair, ""},
    {"classprop1", classprop1, ""},
    {"classprop2", classprop2, ""},
    {"classprop6", classprop6, ""},
    {"classprop10", classprop10, "vacuous: every connected graph with nu <= 0 is an extremal family member"},
    {"ecalpha", ecalpha, ""},
    {"ecmindeg", ecmindeg, "checked per component (an isolated vertex next to C5 is edge-critical)"},
    {"ecbvconn", ecbvconn, ""},
    {"ecdestab", ecdestab, ""},
    {"Gvdestabiliser", gv_destabiliser, "destabilisers of size <= 3"},
    {"lemma-alpha", lemma_alpha, ""},
    {"redundant-edge-persistence", redundant_edge_persistence, ""},
    {"e2-identity", e2_identity, "the 4-cycle term is N(C4; G, v)"},
    {"removal-count", removal_count, "nu of the empty graph is 0"},
    {"nbrsincycle", nbrsincycle, "C<=4-free graphs, cycles of length 5..8"},
    {"lemma-A", lemma_a, "all induced subgraphs of enumerated graphs of order <= 8"},
    {"corollary-A", corollary_a, "all induced subgraphs of enumerated graphs of order <= 8"},
};

constexpr const char* kStarOne = "starone";

std::vector<Graph> family_supplement() {
  const Graph k1 = Graph::from_edges(1, {});
  const Graph k2 = Graph::from_edges(2, {{0, 1}});
  std::vector<Graph> out;
  for (int k = 2; k <= 6; ++k) out.push_back(chain(k));
  for (int k = 4; k <= 6; ++k) out.push_back(bicycle(k));
  for (int k = 1; k <= 4; ++k) out.push_back(shackled_chain(k));
  out.push_back(w5());
  out.push_back(gp72());
  out.push_back(s1());
  out.push_back(s2());
  for (int n = 11; n <= 16; ++n) out.push_back(cycle(n));
  out.push_back(disjoint_union(chain(3), k2));
  out.push_back(disjoint_union(chain(2), k2));
  out.push_back(disjoint_union(chain(2), k1));
  out.push_back(disjoint_union(chain(2), chain(2)));
  out.push_back(disjoint_union(w5(), chain(2)));
  out.push_back(disjoint_union(gp72(), k2));
  return out;
}

using Results = std::vector<PropertyCheckResult>;

void run_on(const std::vector<const Property*>& props, Results& acc, const Graph& g, bool family) {
  Ctx c(g, family);
  std::optional<std::string> g6;
  for (std::size_t i = 0; i < props.size(); ++i) {
    Outcome o;
    props[i]->check(c, o);
    if (o.skipped) continue;
    PropertyCheckResult& r = acc[i];
    ++r.graphs_tested;
    if (o.hit) {
      ++r.hypothesis_hits;
      if (family) ++r.family_hits;
    }
    for (std::string& f : o.failures) {
      if (!g6) g6 = to_graph6(g);
      r.fail(*g6, std::move(f));
    }
  }
}

// Graphs G with G_v = Ch_k, d(v) = 2 and d²(v) = 6: a new vertex v with
// neighbours w1, w2 attached to independent sets A1, A2 of Ch_k with
// |A1| + |A2| = 4. N2(v) = A1 ∪ A2.
PropertyCheckResult star_one() {
  PropertyCheckResult r;
  r.property_id = kStarOne;
  r.note = "constructed instances over Ch_2..Ch_5";
  for (int k = 2; k <= 5; ++k) {
    const Graph h = chain(k);
    const MaskGraph hm(h);
    const int n0 = h.order();
    std::vector<std::vector<Mask>> indep(5);
    for (int s = 0; s <= 4; ++s) {
      for_each_submask_of_size(hm.all, s, [&](Mask a) {
        bool ok = true;
        for_each_bit(a, [&](int x) { ok = ok && (hm.nbhd(x) & a) == 0; });
        if (ok) indep[static_cast<std::size_t>(s)].push_back(a);
      });
    }
    Mask bivalent = 0;
    for (int x = 0; x < n0; ++x) {
      if (h.degree(x) == 2) bivalent |= bit(x);
    }
    for (int s1 = 0; s1 <= 4; ++s1) {
      for (Mask a1 : indep[static_cast<std::size_t>(s1)]) {
        for (Mask a2 : indep[static_cast<std::size_t>(4 - s1)]) {
          std::vector<Edge> edges = h.edges();
          const int v = n0, w1 = n0 + 1, w2 = n0 + 2;
          edges.push_back({v, w1});
          edges.push_back({v, w2});
          for_each_bit(a1, [&](int x) { edges.push_back({w1, x}); });
          for_each_bit(a2, [&](int x) { edges.push_back({w2, x}); });
          const Graph g = Graph::from_edges(n0 + 3, edges);
          const MaskGraph gm(g);
          ++r.graphs_tested;
          const Mask n2 = a1 | a2;
          if (!hm.destabilises(hm.all, n2)) continue;
          ++r.hypothesis_hits;
          bool adjacent_bivalent = false;
          for_each_bit(n2 & bivalent, [&](int x) { adjacent_bivalent = adjacent_bivalent || (hm.nbhd(x) & n2 & bivalent) != 0; });
          const std::int64_t meeting = gm.c4(gm.all) - gm.c4(gm.all & ~(bit(w1) | bit(w2)));
          if (!adjacent_bivalent && meeting < 2) {
            r.fail(to_graph6(g), "Ch_" + std::to_string(k) + ", N2=" + describe(n2) + ": " + std::to_string(meeting) +
                                      " 4-cycles meet N(v), no adjacent bivalent pair");
          }
        }
      }
    }
  }
  return r;
}

}  // namespace

namespace verify_detail {

std::string describe(Mask s) {
  std::string out = "{";
  for_each_bit(s, [&](int v) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v);
  });
  return out + "}";
}

}  // namespace verify_detail

void PropertyCheckResult::fail(std::string graph6, std::string detail) {
  ++failure_count;
  if (failures.size() < kMaxStoredFailures) failures.push_back({std::move(graph6), std::move(detail)});
}

void PropertyCheckResult::merge(const PropertyCheckResult& other) {
  graphs_tested += other.graphs_tested;
  hypothesis_hits += other.hypothesis_hits;
  family_hits += other.family_hits;
  failure_count += other.failure_count;
  for (const Failure& f : other.failures) {
    if (failures.size() < kMaxStoredFailures) failures.push_back(f);
  }
}

std::vector<std::string> property_ids() {
  std::vector<std::string> out;
  for (const Property& p : kProperties) out.push_back(p.id);
  out.push_back(kStarOne);
  return out;
}

std::vector<PropertyCheckResult> verify_property_suite(int n_max, const std::string& filter, int jobs) {
  if (n_max < 1 || n_max > enumeration_cap()) {
    throw GraphError(ErrorCode::InvalidArgument, "n_max must be in 1.." + std::to_string(enumeration_cap()));
  }
  const auto ids = property_ids();
  if (filter != "all" && std::find(ids.begin(), ids.end(), filter) == ids.end()) {
    throw GraphError(ErrorCode::InvalidArgument, "unknown property: " + filter);
  }
  std::vector<const Property*> props;
  for (const Property& p : kProperties) {
    if (filter == "all" || filter == p.id) props.push_back(&p);
  }
  Results total(props.size());
  for (std::size_t i = 0; i < props.size(); ++i) {
    total[i].property_id = props[i]->id;
    total[i].note = props[i]->note;
  }
  if (!props.empty()) {
    const Results blank(props.size());
    for (int n = 1; n <= n_max; ++n) {
      const Enumerator en({n, false, 4, std::nullopt});
      const auto slots = run_items(en, jobs, blank, [&](Results& acc, const Graph& g) { run_on(props, acc, g, false); });
      for (const Results& s : slots) {
        for (std::size_t i = 0; i < props.size(); ++i) total[i].merge(s[i]);
      }
    }
    for (const Graph& g : family_supplement()) run_on(props, total, g, true);
  }
  if (filter == "all" || filter == kStarOne) total.push_back(star_one());
  return total;
}

}  // namespace trifree
