#include "trifree/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <string>

#include "trifree/canonical.hpp"

namespace trifree {

int enumeration_cap() {
  int cap = kEnumerationHardCap;
  if (const char* env = std::getenv("TRIFREE_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < cap) cap = static_cast<int>(v);
  }
  return cap;
}

void validate(const EnumerationSpec& spec) {
  if (spec.order < 1) throw GraphError(ErrorCode::EmptyGraph, "enumeration order must be at least 1");
  if (spec.order > enumeration_cap()) {
    throw GraphError(ErrorCode::OrderTooLarge,
                     "order " + std::to_string(spec.order) + " exceeds the enumeration cap " + std::to_string(enumeration_cap()));
  }
  if (spec.min_girth != 4 && spec.min_girth != 5) throw GraphError(ErrorCode::InvalidArgument, "min_girth must be 4 or 5");
  if (spec.max_degree && *spec.max_degree < 0) throw GraphError(ErrorCode::InvalidArgument, "max_degree must be non-negative");
}

namespace {

using Key = std::uint32_t;  // degree in the high bits, second valency below

Key vertex_key(const std::uint64_t* rows, const int* deg, int v) {
  int d2 = 0;
  for (std::uint64_t b = rows[v]; b; b &= b - 1) d2 += deg[std::countr_zero(b)];
  return (static_cast<Key>(deg[v]) << 16) | static_cast<Key>(d2);
}

std::string certificate_of(const std::uint64_t* rows, int n) { return canon::encode_certificate(std::span<const std::uint64_t>(rows, static_cast<std::size_t>(n))); }

bool connected_rows(const std::uint64_t* rows, int n) {
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t b = frontier; b; b &= b - 1) next |= rows[std::countr_zero(b)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

}  // namespace

Enumerator::Enumerator(EnumerationSpec spec) : spec_(spec) {
  validate(spec_);
  const int split = std::max(1, spec_.order - 3);
  Node k1;
  k1.n = 1;
  std::vector<Node> level{k1};
  for (int n = 1; n < split; ++n) {
    std::vector<Node> next;
    for (const Node& p : level) expand(p, next);
    level = std::move(next);
  }
  items_ = std::move(level);
}

// Appends the accepted canonical children of `parent`, sorted by certificate.
void Enumerator::expand(const Node& parent, std::vector<Node>& children) const {
  const int n = parent.n;
  const int m = n + 1;
  const std::uint64_t* prow = parent.rows;
  int pdeg[kEnumerationHardCap];
  int maxdeg = 0;
  for (int v = 0; v < n; ++v) {
    pdeg[v] = std::popcount(prow[v]);
    maxdeg = std::max(maxdeg, pdeg[v]);
  }
  const int cap = spec_.max_degree.value_or(kEnumerationHardCap);
  // The new vertex must have maximum degree in the child.
  if (maxdeg > cap) return;
  const std::string parent_cert = certificate_of(prow, n);

  std::vector<std::pair<std::string, Node>> accepted;

  // Depth-first over independent neighbour sets S in increasing vertex order.
  auto consider = [&](std::uint64_t s) {
    const int size = std::popcount(s);
    if (size < maxdeg || size > cap) return;
    Node child;
    child.n = m;
    int deg[kEnumerationHardCap];
    for (int v = 0; v < n; ++v) {
      const bool in = (s >> v) & 1;
      child.rows[v] = prow[v] | (in ? std::uint64_t{1} << n : 0);
      deg[v] = pdeg[v] + in;
      if (deg[v] > size) return;
    }
    child.rows[n] = s;
    deg[n] = size;
    const Key kx = vertex_key(child.rows, deg, n);
    bool unique_max = true;
    for (int v = 0; v < n; ++v) {
      if (deg[v] < size) continue;
      const Key kv = vertex_key(child.rows, deg, v);
      if (kv > kx) return;
      if (kv == kx) unique_max = false;
    }

    canon::WordForm form;
    canon::canonicalize(std::span<const std::uint64_t>(child.rows, static_cast<std::size_t>(m)), form);
    if (!unique_max) {
      // w: the max-key vertex placed last in the canonical order.
      int w = -1;
      for (int i = m - 1; i >= 0 && w < 0; --i) {
        const int v = form.vertex_at[static_cast<std::size_t>(i)];
        if (vertex_key(child.rows, deg, v) == kx) w = v;
      }
      if (w != n) {
        std::uint64_t reduced[kEnumerationHardCap];
        int k = 0;
        for (int v = 0; v < m; ++v) {
          if (v == w) continue;
          const std::uint64_t r = child.rows[v];
          const std::uint64_t low = r & ((std::uint64_t{1} << w) - 1);
          const std::uint64_t high = (r >> (w + 1)) << w;
          reduced[k++] = low | high;
        }
        canon::WordForm pform;
        canon::canonicalize(std::span<const std::uint64_t>(reduced, static_cast<std::size_t>(n)), pform);
        if (certificate_of(pform.rows.data(), n) != parent_cert) return;
      }
    }
    Node out;
    out.n = m;
    std::copy_n(form.rows.begin(), m, out.rows);
    accepted.emplace_back(certificate_of(out.rows, m), out);
  };

  const bool girth5 = spec_.min_girth == 5;
  // Vertices allowed in S: degree room under the cap.
  std::uint64_t allowed = 0;
  for (int v = 0; v < n; ++v) {
    if (pdeg[v] + 1 <= cap) allowed |= std::uint64_t{1} << v;
  }
  auto rec = [&](auto&& self, int from, std::uint64_t s, std::uint64_t forbidden) -> void {
    consider(s);
    for (int v = from; v < n; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (!(allowed & bit) || (forbidden & bit)) continue;
      std::uint64_t f = forbidden | prow[v];
      if (girth5) {
        // No two members of S may share a neighbour (the relation is
        // symmetric, so forbidding later vertices suffices).
        for (std::uint64_t b = prow[v]; b; b &= b - 1) f |= prow[std::countr_zero(b)];
      }
      self(self, v + 1, s | bit, f);
    }
  };
  rec(rec, 0, 0, 0);

  std::sort(accepted.begin(), accepted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  accepted.erase(std::unique(accepted.begin(), accepted.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
                 accepted.end());
  for (auto& [cert, node] : accepted) children.push_back(node);
}

void Enumerator::emit_if_wanted(const Node& node, const std::function<void(const Graph&)>& emit) const {
  if (spec_.connected_only && !connected_rows(node.rows, node.n)) return;
  emit(Graph::from_rows(std::span<const std::uint64_t>(node.rows, static_cast<std::size_t>(node.n))));
}

void Enumerator::descend(const Node& node, const std::function<void(const Graph&)>& emit) const {
  if (node.n == spec_.order) {
    emit_if_wanted(node, emit);
    return;
  }
  std::vector<Node> children;
  expand(node, children);
  for (const Node& c : children) descend(c, emit);
}

void Enumerator::run_item(int i, const std::function<void(const Graph&)>& emit) const {
  if (i < 0 || i >= item_count()) throw GraphError(ErrorCode::InvalidArgument, "work item out of range");
  descend(items_[static_cast<std::size_t>(i)], emit);
}

void enumerate(const EnumerationSpec& spec, const std::function<void(const Graph&)>& emit) {
  const Enumerator en(spec);
  for (int i = 0; i < en.item_count(); ++i) en.run_item(i, emit);
}

std::vector<Graph> enumerate_all(const EnumerationSpec& spec) {
  std::vector<Graph> out;
  enumerate(spec, [&](const Graph& g) { out.push_back(g); });
  return out;
}

void enumerate_partition(const EnumerationSpec& spec, int part, int parts, const std::function<void(const Graph&)>& emit) {
  if (parts < 1 || part < 0 || part >= parts) throw GraphError(ErrorCode::InvalidArgument, "bad partition index");
  const Enumerator en(spec);
  for (int i = part; i < en.item_count(); i += parts) en.run_item(i, emit);
}

std::int64_t count_classes(const EnumerationSpec& spec, int jobs) {
  const Enumerator en(spec);
  const auto slots = run_items(en, jobs, std::int64_t{0}, [](std::int64_t& acc, const Graph&) { ++acc; });
  std::int64_t total = 0;
  for (auto c : slots) total += c;
  return total;
}

std::vector<Graph> naive_enumerate(const EnumerationSpec& spec) {
  validate(spec);
  const int n = spec.order;
  if (n > 7) throw GraphError(ErrorCode::OrderTooLarge, "naive enumeration is limited to order 7");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  std::map<std::string, Graph> classes;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::fill(rows.begin(), rows.end(), 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1) {
        rows[static_cast<std::size_t>(pairs[i].first)] |= std::uint64_t{1} << pairs[i].second;
        rows[static_cast<std::size_t>(pairs[i].second)] |= std::uint64_t{1} << pairs[i].first;
      }
    }
    // Cheap row-level filters before building a Graph.
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = u + 1; v < n && ok; ++v) {
        const std::uint64_t common = rows[static_cast<std::size_t>(u)] & rows[static_cast<std::size_t>(v)];
        const bool adjacent = (rows[static_cast<std::size_t>(u)] >> v) & 1;
        if (adjacent && common) ok = false;                                  // triangle
        if (spec.min_girth == 5 && std::popcount(common) >= 2) ok = false;  // 4-cycle
      }
      if (spec.max_degree && std::popcount(rows[static_cast<std::size_t>(u)]) > *spec.max_degree) ok = false;
    }
    if (!ok || (spec.connected_only && !connected_rows(rows.data(), n))) continue;
    const Graph g = Graph::from_rows(rows);
    const CanonicalForm form = canonical_form(g);
    classes.emplace(form.certificate, form.canonical_graph);
  }
  std::vector<Graph> out;
  for (auto& [cert, g] : classes) out.push_back(g);
  return out;
}

}  // namespace trifree
