#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace specgraph {

inline constexpr int kMaxOrder = 64;        // adjacency rows are 64-bit masks
inline constexpr int kMaxGraph6Order = 62;  // graph6 short form
inline constexpr int kMaxCanonicalOrder = 10;

/// Simple undirected graph of order 1..64; adjacency held as row bitsets.
/// Values are immutable in spirit: build once, then share freely.
class Graph {
public:
  explicit Graph(int n) : n_(n), rows_{} {
    if (n < 1 || n > kMaxOrder)
      throw std::invalid_argument("graph order must be in 1.." + std::to_string(kMaxOrder));
  }

  int order() const { return n_; }

  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1u; }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed in a simple graph");
    rows_[u] |= uint64_t{1} << v;
    rows_[v] |= uint64_t{1} << u;
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    rows_[u] &= ~(uint64_t{1} << v);
    rows_[v] &= ~(uint64_t{1} << u);
  }

  /// Neighbor set of v as a bitmask.
  uint64_t neighbors(int v) const { return rows_[v]; }

  int degree(int v) const { return std::popcount(rows_[v]); }

  size_t edge_count() const {
    size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += static_cast<size_t>(degree(v));
    return twice / 2;
  }

  /// Graph with vertex i renamed to perm[i].
  Graph relabeled(const std::vector<int>& perm) const;

  bool operator==(const Graph& o) const {
    if (n_ != o.n_) return false;
    for (int v = 0; v < n_; ++v)
      if (rows_[v] != o.rows_[v]) return false;
    return true;
  }

private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
  }

  int n_;
  std::array<uint64_t, kMaxOrder> rows_;
};

/// graph6 decode failure; offset is the byte position within the line.
struct Graph6Error : std::runtime_error {
  Graph6Error(const std::string& msg, size_t off)
      : std::runtime_error(msg + " (byte offset " + std::to_string(off) + ")"), offset(off) {}
  size_t offset;
};

/// Decodes one short-form graph6 line (n <= 62). Sparse6 and the long
/// form are rejected explicitly.
Graph parse_graph6(std::string_view line);

/// Short-form graph6 bytes for the labeled graph; inverse of parse_graph6.
std::string encode_graph6(const Graph& g);

/// BFS reachability from vertex 0.
bool is_connected(const Graph& g);

/// Lexicographically minimal encode_graph6 over all vertex relabelings
/// (branch-and-bound over orderings). Supports n <= 10.
std::string canonical_form(const Graph& g);

/// Canonical upper-triangle bits packed into a word, bit k = pair k in
/// graph6 column-major order. Supports n <= 11.
uint64_t canonical_key(const Graph& g);

/// Rebuilds a graph from packed upper-triangle bits.
Graph graph_from_edge_bits(int n, uint64_t bits);

/// One representative per isomorphism class of simple connected graphs
/// on m vertices, 2 <= m <= 7, sorted by graph6 bytes. Labeled
/// enumeration over all edge sets with canonical-form dedup; the mask
/// space is partitioned across workers.
std::vector<Graph> enumerate_connected_graphs(int m, int workers = 1);

/// Census of order k+1 from a complete census of order k (k <= 9):
/// attach one new vertex with every nonempty neighborhood, dedup by
/// canonical form. Used to materialize orders beyond the generator cap.
std::vector<Graph> extend_connected_census(const std::vector<Graph>& prev, int workers = 1);

}  // namespace specgraph
