#include <algorithm>
#include <array>

#include "canonical_internal.hpp"
#include "specgraph/graph.hpp"

namespace specgraph {

namespace {

constexpr uint64_t kUnset = ~uint64_t{0};

// Branch-and-bound search for the relabeling whose column-major
// upper-triangle bit string is lexicographically minimal. Column j of a
// partial ordering is packed into a word with row 0 at the most
// significant bit, so word comparison is bit-string comparison.
//
// Invariant at every node: the columns of the current prefix equal
// best[1..depth-1]. A strictly smaller candidate column overwrites
// best[depth] and resets the deeper columns, so siblings explored later
// always compare against the tightest bound.
struct CanonSearch {
  const uint64_t* rows;
  int n;
  std::array<int, 12> deg{};
  std::array<int, 12> order{};
  std::array<uint64_t, 12> best{};

  CanonSearch(const uint64_t* r, int order_n) : rows(r), n(order_n) {
    best.fill(kUnset);
    for (int v = 0; v < n; ++v) deg[v] = std::popcount(rows[v]);
  }

  uint64_t column_bits(int depth, int v) const {
    uint64_t col = 0;
    const uint64_t row = rows[v];
    for (int i = 0; i < depth; ++i) col = (col << 1) | ((row >> order[i]) & 1u);
    return col;
  }

  void dfs(int depth, uint32_t used) {
    if (depth == n) return;  // best[] already equals the current string
    struct Cand {
      uint64_t col;
      int deg;
      int v;
    };
    std::array<Cand, 12> cand{};
    int cn = 0;
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1u) continue;
      cand[cn++] = {column_bits(depth, v), deg[v], v};
    }
    std::sort(cand.begin(), cand.begin() + cn, [](const Cand& a, const Cand& b) {
      if (a.col != b.col) return a.col < b.col;
      if (a.deg != b.deg) return a.deg < b.deg;
      return a.v < b.v;
    });
    for (int c = 0; c < cn; ++c) {
      const uint64_t col = cand[c].col;
      if (col > best[depth]) break;  // sorted: the rest prune too
      if (col < best[depth]) {
        best[depth] = col;
        for (int d = depth + 1; d < n; ++d) best[d] = kUnset;
      }
      order[depth] = cand[c].v;
      dfs(depth + 1, used | (uint32_t{1} << cand[c].v));
    }
  }

  // Packed upper-triangle bits of the minimal labeling, pair k in
  // column-major order at bit k.
  uint64_t run() {
    dfs(0, 0);
    uint64_t bits = 0;
    size_t k = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++k)
        if ((best[j] >> (j - 1 - i)) & 1u) bits |= uint64_t{1} << k;
    return bits;
  }
};

// Decision variant: scan for any relabeling strictly below the identity
// labeling and bail out at the first strict improvement.
struct MinLabelCheck {
  const uint64_t* rows;
  int n;
  std::array<int, 12> deg{};
  std::array<int, 12> order{};
  std::array<uint64_t, 12> ident{};

  MinLabelCheck(const uint64_t* r, int order_n) : rows(r), n(order_n) {
    for (int v = 0; v < n; ++v) deg[v] = std::popcount(rows[v]);
    for (int j = 1; j < n; ++j) {
      uint64_t col = 0;
      for (int i = 0; i < j; ++i) col = (col << 1) | ((rows[j] >> i) & 1u);
      ident[j] = col;
    }
  }

  uint64_t column_bits(int depth, int v) const {
    uint64_t col = 0;
    const uint64_t row = rows[v];
    for (int i = 0; i < depth; ++i) col = (col << 1) | ((row >> order[i]) & 1u);
    return col;
  }

  // True when a strictly smaller relabeling exists in this subtree.
  bool dfs(int depth, uint32_t used) {
    if (depth == n) return false;
    struct Cand {
      uint64_t col;
      int v;
    };
    std::array<Cand, 12> cand{};
    int cn = 0;
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1u) continue;
      cand[cn++] = {column_bits(depth, v), v};
    }
    std::sort(cand.begin(), cand.begin() + cn,
              [](const Cand& a, const Cand& b) { return a.col < b.col; });
    for (int c = 0; c < cn; ++c) {
      if (cand[c].col > ident[depth]) break;
      if (cand[c].col < ident[depth]) return true;
      order[depth] = cand[c].v;
      if (dfs(depth + 1, used | (uint32_t{1} << cand[c].v))) return true;
    }
    return false;
  }

  bool is_min() { return !dfs(0, 0); }
};

}  // namespace

namespace detail {

bool is_min_labeled(const uint64_t* rows, int n) {
  MinLabelCheck check(rows, n);
  return check.is_min();
}

}  // namespace detail

uint64_t canonical_key(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder + 1)
    throw std::invalid_argument("canonical_key supports order <= 11");
  std::array<uint64_t, 12> rows{};
  for (int v = 0; v < g.order(); ++v) rows[v] = g.neighbors(v);
  CanonSearch s(rows.data(), g.order());
  return s.run();
}

std::string canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw std::invalid_argument("canonical_form supports order <= 10");
  return encode_graph6(graph_from_edge_bits(g.order(), canonical_key(g)));
}

}  // namespace specgraph
