#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trifree/analysis.hpp"
#include "trifree/graph.hpp"

namespace trifree {

enum class Family { Chain, Bicycle, ShackledChain, W5, GP72, CycleN, S1, S2 };

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view name);

struct FamilyMember {
  Family family = Family::Chain;
  std::optional<int> parameter;
  Graph graph;
};

// Vertex numbering (stable, so graph6 output is reproducible):
//   chain(k)          C5 on 0..4 cyclically; each extension step adds
//                     v = n, w1 = n+1, w2 = n+2 at the lowest-index
//                     bivalent vertex.
//   bicycle(k)        outer cycle c_1..c_2k -> 0..2k-1, inner cycle
//                     d_1..d_k -> 2k..3k-1.
//   shackled_chain(k) chain(3) on 0..7, then v = 8, w1 = 9, w2 = 10, then
//                     extension steps as for chains.
//   w5()              a0, a1 -> 0, 1; b0..b3 -> 2..5; c0..c7 -> 6..13.
//   gp72()            a0..a6 -> 0..6; b0..b6 -> 7..13.
//   cycle(n), s1(), s2()  c_i -> i.

Graph chain(int k);
Graph bicycle(int k);
Graph shackled_chain(int k);
Graph w5();
Graph gp72();
Graph cycle(int n);
Graph s1();
Graph s2();

/// One extension step at bivalent vertex x with neighbours y1, y2: adds
/// v, w1, w2 and edges vw1, vw2, w1x, w2y1, w2y2. Both chains and shackled
/// chains grow by this step.
Graph extend_at(const Graph& g, int x);
/// Shackled chain of order 11 from Ch_3 and its bivalent vertices with
/// a1a2, b1b2 edges: adds v, w1, w2 with vw1, vw2, w1a1, w1b1, w2a2, w2b2.
Graph shackle(const Graph& ch3, int a1, int a2, int b1, int b2);
std::vector<int> bivalent_vertices(const Graph& g);

/// Builds a member by family name and parameter.
Graph build(Family f, std::optional<int> parameter);

/// Identifies a connected graph as a member of the ν = 0 family
/// {W5, GP(7,2)} ∪ {Ch_k : k >= 2} ∪ {BC_k : k >= 5}; candidates are chosen
/// by order and size, then compared by certificate.
std::optional<FamilyMember> classify_in_G(const Graph& g);
/// Like classify_in_G, also recognising shackled chains.
std::optional<FamilyMember> classify_chain_like(const Graph& g);

struct ClosedForm {
  int n = 0;
  int e = 0;
  int alpha = 0;
  std::int64_t c4 = 0;
  std::int64_t nu = 0;
};

/// Published values for a family member, when known.
std::optional<ClosedForm> closed_form(Family f, std::optional<int> parameter);

/// Invariant records for Ch_2..Ch_kmax, BC_4..BC_kmax, SCh_1..SCh_kmax, W5
/// and GP(7,2), each checked against its closed form. A mismatch throws.
std::vector<InvariantRecord> family_table(int k_max);

/// Display name such as "Ch_4" or "W5".
std::string member_name(Family f, std::optional<int> parameter);

}  // namespace trifree
