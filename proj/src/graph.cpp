#include "specgraph/graph.hpp"

namespace specgraph {

namespace {

size_t bit_count(int n) { return static_cast<size_t>(n) * (n - 1) / 2; }

}  // namespace

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw std::invalid_argument("permutation size does not match graph order");
  Graph h(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) h.add_edge(perm[u], perm[v]);
  return h;
}

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw Graph6Error("empty graph6 line", 0);
  const unsigned char c0 = static_cast<unsigned char>(line[0]);
  if (c0 == ':' || c0 == ';' || c0 == '&')
    throw Graph6Error("sparse6/digraph6 input is not supported", 0);
  if (c0 == 126) throw Graph6Error("graph6 long form is not supported", 0);
  if (c0 < 63 || c0 > 126) throw Graph6Error("header byte out of range 63..126", 0);
  const int n = static_cast<int>(c0) - 63;
  if (n < 1) throw Graph6Error("graph of order 0 is not supported", 0);
  if (n > kMaxGraph6Order) throw Graph6Error("graph6 order exceeds 62", 0);

  const size_t bits = bit_count(n);
  const size_t need = (bits + 5) / 6;
  if (line.size() < 1 + need)
    throw Graph6Error("truncated bit stream", line.size());
  if (line.size() > 1 + need)
    throw Graph6Error("trailing bytes after graph6 data", 1 + need);

  Graph g(n);
  size_t k = 0;  // pair index in column-major order (0,1),(0,2),(1,2),(0,3),...
  int i = 0, j = 1;
  for (size_t pos = 1; pos < line.size(); ++pos) {
    const unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126) throw Graph6Error("data byte out of range 63..126", pos);
    const unsigned val = c - 63;
    for (int b = 5; b >= 0; --b, ++k) {
      const bool bit = (val >> b) & 1u;
      if (k < bits) {
        if (bit) g.add_edge(i, j);
        if (++i == j) {
          i = 0;
          ++j;
        }
      } else if (bit) {
        throw Graph6Error("nonzero padding bits", pos);
      }
    }
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order)
    throw std::invalid_argument("graph6 short form supports order <= 62");
  std::string out;
  const size_t bits = bit_count(n);
  out.reserve(1 + (bits + 5) / 6);
  out.push_back(static_cast<char>(n + 63));
  unsigned val = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      val = (val << 1) | (g.has_edge(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(val + 63));
        val = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((val << (6 - filled)) + 63));
  return out;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  const uint64_t all = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
  uint64_t seen = 1;
  uint64_t frontier = 1;
  while (frontier != 0) {
    uint64_t next = 0;
    uint64_t f = frontier;
    while (f != 0) {
      const int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.neighbors(v);
    }
    frontier = next & ~seen;
    seen |= next;
    if (seen == all) return true;
  }
  return seen == all;
}

Graph graph_from_edge_bits(int n, uint64_t bits) {
  Graph g(n);
  size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((bits >> k) & 1u) g.add_edge(i, j);
  return g;
}

}  // namespace specgraph
