#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trifree/graph.hpp"

namespace trifree {

struct CanonicalForm {
  Graph canonical_graph;
  /// labeling[v] is the canonical index of input vertex v.
  std::vector<int> labeling;
  /// Isomorphism-class key: equal exactly for isomorphic graphs.
  std::string certificate;
};

/// Canonical form for graphs of order <= 64.
CanonicalForm canonical_form(const Graph& g);
std::string certificate(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

namespace canon {

/// Word-level result: rows of the canonical graph and, for each canonical
/// position, the input vertex placed there.
struct WordForm {
  int n = 0;
  std::array<std::uint64_t, 64> rows{};
  std::array<std::uint8_t, 64> vertex_at{};
};

/// Canonical labelling of the graph given by single-word rows (n <= 64).
///
/// Equitable refinement by neighbour counts, then a depth-first search that
/// individualises each vertex of the first smallest non-singleton cell in
/// ascending index order. The leaf with the lexicographically largest row
/// sequence is canonical. Automorphisms found by leaf equality prune the
/// search (orbit skipping at each node, and a jump back to the divergence
/// level).
void canonicalize(std::span<const std::uint64_t> rows, WordForm& out);

/// Certificate bytes for canonical rows: order, then each row in
/// ceil(n/8) little-endian bytes.
std::string encode_certificate(std::span<const std::uint64_t> canonical_rows);

}  // namespace canon

}  // namespace trifree
