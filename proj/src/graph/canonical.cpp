#include "trifree/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace trifree {

namespace canon {

namespace {

using Perm = std::array<std::uint8_t, 64>;

struct Partition {
  std::array<std::uint64_t, 64> cells;
  int count = 0;
};

class Search {
 public:
  Search(const std::uint64_t* rows, int n) : rows_(rows), n_(n) {}

  void run(WordForm& out) {
    Partition unit{};
    unit.cells[0] = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    unit.count = 1;
    explore(unit, 0);
    out.n = n_;
    std::copy_n(best_rows_.begin(), n_, out.rows.begin());
    std::copy_n(best_lab_.begin(), n_, out.vertex_at.begin());
  }

 private:
  // Splits cells by neighbour counts into each cell until stable. Sub-cells
  // are ordered by ascending count, so the result is label-invariant.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int wi = 0; wi < p.count && !changed; ++wi) {
        const std::uint64_t w = p.cells[static_cast<std::size_t>(wi)];
        for (int xi = 0; xi < p.count; ++xi) {
          const std::uint64_t x = p.cells[static_cast<std::size_t>(xi)];
          if ((x & (x - 1)) == 0) continue;
          std::array<std::uint64_t, 65> by_count{};
          int lo = 64;
          int hi = 0;
          for (std::uint64_t b = x; b; b &= b - 1) {
            const int v = std::countr_zero(b);
            const int c = std::popcount(rows_[v] & w);
            by_count[static_cast<std::size_t>(c)] |= std::uint64_t{1} << v;
            lo = std::min(lo, c);
            hi = std::max(hi, c);
          }
          if (lo == hi) continue;
          std::array<std::uint64_t, 65> parts{};
          int k = 0;
          for (int c = lo; c <= hi; ++c) {
            if (by_count[static_cast<std::size_t>(c)]) parts[static_cast<std::size_t>(k++)] = by_count[static_cast<std::size_t>(c)];
          }
          // Shift the tail right by k-1 and splice the parts in at xi.
          for (int i = p.count - 1; i > xi; --i) p.cells[static_cast<std::size_t>(i + k - 1)] = p.cells[static_cast<std::size_t>(i)];
          for (int i = 0; i < k; ++i) p.cells[static_cast<std::size_t>(xi + i)] = parts[static_cast<std::size_t>(i)];
          p.count += k - 1;
          changed = true;
          break;
        }
      }
    }
  }

  int leaf(const Partition& p, int depth) {
    Perm lab{};
    Perm pos{};
    for (int i = 0; i < n_; ++i) {
      const int v = std::countr_zero(p.cells[static_cast<std::size_t>(i)]);
      lab[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
      pos[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(i);
    }
    std::array<std::uint64_t, 64> canon{};
    for (int i = 0; i < n_; ++i) {
      std::uint64_t r = 0;
      for (std::uint64_t b = rows_[lab[static_cast<std::size_t>(i)]]; b; b &= b - 1) {
        r |= std::uint64_t{1} << pos[static_cast<std::size_t>(std::countr_zero(b))];
      }
      canon[static_cast<std::size_t>(i)] = r;
    }

    if (!have_best_) {
      have_best_ = true;
      best_rows_ = first_rows_ = canon;
      best_lab_ = first_lab_ = lab;
      best_path_ = first_path_ = path_;
      return depth;
    }
    if (std::equal(canon.begin(), canon.begin() + n_, first_rows_.begin())) {
      record_automorphism(first_lab_, lab);
      return common_prefix(first_path_, depth);
    }
    const int cmp = compare(canon, best_rows_);
    if (cmp == 0) {
      record_automorphism(best_lab_, lab);
      return common_prefix(best_path_, depth);
    }
    if (cmp > 0) {
      best_rows_ = canon;
      best_lab_ = lab;
      best_path_ = path_;
    }
    return depth;
  }

  int compare(const std::array<std::uint64_t, 64>& a, const std::array<std::uint64_t, 64>& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)]) {
        return a[static_cast<std::size_t>(i)] > b[static_cast<std::size_t>(i)] ? 1 : -1;
      }
    }
    return 0;
  }

  int common_prefix(const Perm& other, int depth) const {
    int l = 0;
    while (l < depth && other[static_cast<std::size_t>(l)] == path_[static_cast<std::size_t>(l)]) ++l;
    return l;
  }

  void record_automorphism(const Perm& from, const Perm& to) {
    Perm gamma{};
    for (int i = 0; i < n_; ++i) gamma[from[static_cast<std::size_t>(i)]] = to[static_cast<std::size_t>(i)];
    automorphisms_.push_back(gamma);
  }

  // Orbit representatives (union-find roots) of the known automorphisms
  // that fix path_[0..depth) pointwise.
  void stabiliser_orbits(int depth, Perm& root) const {
    std::iota(root.begin(), root.begin() + n_, 0);
    auto find = [&](int v) {
      while (root[static_cast<std::size_t>(v)] != v) {
        root[static_cast<std::size_t>(v)] = root[root[static_cast<std::size_t>(v)]];
        v = root[static_cast<std::size_t>(v)];
      }
      return v;
    };
    for (const Perm& g : automorphisms_) {
      bool fixes = true;
      for (int l = 0; l < depth && fixes; ++l) {
        const auto v = path_[static_cast<std::size_t>(l)];
        fixes = g[v] == v;
      }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v);
        const int b = find(g[static_cast<std::size_t>(v)]);
        if (a != b) root[static_cast<std::size_t>(std::max(a, b))] = static_cast<std::uint8_t>(std::min(a, b));
      }
    }
    for (int v = 0; v < n_; ++v) root[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(find(v));
  }

  int explore(Partition p, int depth) {
    refine(p);
    if (p.count == n_) return leaf(p, depth);

    int target = -1;
    int target_size = 65;
    for (int i = 0; i < p.count; ++i) {
      const int s = std::popcount(p.cells[static_cast<std::size_t>(i)]);
      if (s > 1 && s < target_size) {
        target = i;
        target_size = s;
      }
    }
    const std::uint64_t cell = p.cells[static_cast<std::size_t>(target)];

    std::size_t seen_autos = static_cast<std::size_t>(-1);
    Perm root{};
    std::uint64_t explored = 0;
    for (std::uint64_t b = cell; b; b &= b - 1) {
      const int v = std::countr_zero(b);
      if (explored != 0 && !automorphisms_.empty()) {
        if (seen_autos != automorphisms_.size()) {
          stabiliser_orbits(depth, root);
          seen_autos = automorphisms_.size();
        }
        bool equivalent = false;
        for (std::uint64_t e = explored; e && !equivalent; e &= e - 1) {
          equivalent = root[static_cast<std::size_t>(std::countr_zero(e))] == root[static_cast<std::size_t>(v)];
        }
        if (equivalent) continue;
      }
      explored |= std::uint64_t{1} << v;

      Partition child = p;
      const std::uint64_t single = std::uint64_t{1} << v;
      for (int i = child.count - 1; i > target; --i) child.cells[static_cast<std::size_t>(i + 1)] = child.cells[static_cast<std::size_t>(i)];
      child.cells[static_cast<std::size_t>(target)] = single;
      child.cells[static_cast<std::size_t>(target + 1)] = cell & ~single;
      ++child.count;

      path_[static_cast<std::size_t>(depth)] = static_cast<std::uint8_t>(v);
      const int resume = explore(child, depth + 1);
      if (resume < depth) return resume;
    }
    return depth;
  }

  const std::uint64_t* rows_;
  int n_;
  bool have_best_ = false;
  std::array<std::uint64_t, 64> best_rows_{};
  std::array<std::uint64_t, 64> first_rows_{};
  Perm best_lab_{};
  Perm first_lab_{};
  Perm best_path_{};
  Perm first_path_{};
  Perm path_{};
  std::vector<Perm> automorphisms_;
};

}  // namespace

void canonicalize(std::span<const std::uint64_t> rows, WordForm& out) {
  if (rows.empty()) throw GraphError(ErrorCode::EmptyGraph, "canonical labelling of the empty graph");
  if (rows.size() > 64) throw GraphError(ErrorCode::OrderTooLarge, "canonical labelling needs at most 64 vertices");
  Search(rows.data(), static_cast<int>(rows.size())).run(out);
}

std::string encode_certificate(std::span<const std::uint64_t> canonical_rows) {
  const std::size_t n = canonical_rows.size();
  const std::size_t bytes = (n + 7) / 8;
  std::string cert;
  cert.reserve(1 + n * bytes);
  cert.push_back(static_cast<char>(n));
  for (std::uint64_t r : canonical_rows) {
    for (std::size_t b = 0; b < bytes; ++b) cert.push_back(static_cast<char>((r >> (8 * b)) & 0xFF));
  }
  return cert;
}

}  // namespace canon

CanonicalForm canonical_form(const Graph& g) {
  canon::WordForm form;
  canon::canonicalize(g.word_rows(), form);
  const auto rows = std::span<const std::uint64_t>(form.rows.data(), static_cast<std::size_t>(form.n));
  CanonicalForm out{Graph::from_rows(rows, g.label()), std::vector<int>(static_cast<std::size_t>(form.n)),
                    canon::encode_certificate(rows)};
  for (int i = 0; i < form.n; ++i) out.labeling[form.vertex_at[static_cast<std::size_t>(i)]] = i;
  return out;
}

std::string certificate(const Graph& g) {
  canon::WordForm form;
  canon::canonicalize(g.word_rows(), form);
  return canon::encode_certificate(std::span<const std::uint64_t>(form.rows.data(), static_cast<std::size_t>(form.n)));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return certificate(a) == certificate(b);
}

}  // namespace trifree
