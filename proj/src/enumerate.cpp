#include <algorithm>
#include <thread>
#include <unordered_set>

#include "canonical_internal.hpp"
#include "specgraph/graph.hpp"

namespace specgraph {

namespace {

std::vector<Graph> sorted_graphs(int n, std::vector<uint64_t>& keys) {
  std::vector<std::string> codes;
  codes.reserve(keys.size());
  for (uint64_t k : keys) codes.push_back(encode_graph6(graph_from_edge_bits(n, k)));
  std::sort(codes.begin(), codes.end());
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const auto& c : codes) out.push_back(parse_graph6(c));
  return out;
}

}  // namespace

std::vector<Graph> enumerate_connected_graphs(int m, int workers) {
  if (m < 2 || m > 7)
    throw std::invalid_argument("enumerate_connected_graphs supports 2 <= m <= 7");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");

  const int bits = m * (m - 1) / 2;
  const uint64_t total = uint64_t{1} << bits;

  // Pair order matches graph6 column-major bit order.
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(bits);
  for (int j = 1; j < m; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);

  // A mask survives iff it is connected and its labeling is already the
  // canonical minimum, which keeps exactly one labeled graph per class.
  auto scan = [&](uint64_t lo, uint64_t hi, std::vector<uint64_t>& kept) {
    std::array<uint64_t, 8> rows;
    for (uint64_t mask = lo; mask < hi; ++mask) {
      rows.fill(0);
      uint64_t e = mask;
      while (e != 0) {
        const int k = std::countr_zero(e);
        e &= e - 1;
        rows[pairs[k].first] |= uint64_t{1} << pairs[k].second;
        rows[pairs[k].second] |= uint64_t{1} << pairs[k].first;
      }
      bool isolated = false;
      for (int v = 0; v < m; ++v)
        if (rows[v] == 0) {
          isolated = true;
          break;
        }
      if (isolated) continue;
      const uint64_t all = (uint64_t{1} << m) - 1;
      uint64_t seen = 1, frontier = 1;
      while (frontier != 0 && seen != all) {
        uint64_t next = 0, f = frontier;
        while (f != 0) {
          const int v = std::countr_zero(f);
          f &= f - 1;
          next |= rows[v];
        }
        frontier = next & ~seen;
        seen |= next;
      }
      if (seen != all) continue;
      if (detail::is_min_labeled(rows.data(), m)) kept.push_back(mask);
    }
  };

  std::vector<uint64_t> keys;
  if (workers == 1 || total < 4096) {
    scan(0, total, keys);
  } else {
    const int w = workers;
    std::vector<std::vector<uint64_t>> local(w);
    std::vector<std::thread> threads;
    threads.reserve(w);
    for (int t = 0; t < w; ++t) {
      const uint64_t lo = total / w * t;
      const uint64_t hi = (t == w - 1) ? total : total / w * (t + 1);
      threads.emplace_back([&, lo, hi, t] { scan(lo, hi, local[t]); });
    }
    for (auto& th : threads) th.join();
    for (const auto& l : local) keys.insert(keys.end(), l.begin(), l.end());
  }
  return sorted_graphs(m, keys);
}

std::vector<Graph> extend_connected_census(const std::vector<Graph>& prev, int workers) {
  if (prev.empty()) throw std::invalid_argument("previous census is empty");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  const int k = prev.front().order();
  if (k + 1 > kMaxCanonicalOrder + 1)
    throw std::invalid_argument("extension target order exceeds canonical limit");
  for (const auto& g : prev)
    if (g.order() != k) throw std::invalid_argument("previous census mixes orders");

  // Attaching a new vertex to every nonempty subset of a connected graph
  // hits at least one labeled copy of every connected class of order k+1,
  // since every connected graph has a non-cut vertex.
  auto scan = [&](size_t lo, size_t hi, std::unordered_set<uint64_t>& keys) {
    for (size_t idx = lo; idx < hi; ++idx) {
      const Graph& base = prev[idx];
      Graph h(k + 1);
      for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
          if (base.has_edge(u, v)) h.add_edge(u, v);
      const uint32_t subsets = uint32_t{1} << k;
      for (uint32_t s = 1; s < subsets; ++s) {
        Graph cand = h;
        uint32_t bitset = s;
        while (bitset != 0) {
          const int v = std::countr_zero(bitset);
          bitset &= bitset - 1;
          cand.add_edge(v, k);
        }
        keys.insert(canonical_key(cand));
      }
    }
  };

  std::unordered_set<uint64_t> keyset;
  if (workers == 1 || prev.size() < 64) {
    scan(0, prev.size(), keyset);
  } else {
    const int w = workers;
    std::vector<std::unordered_set<uint64_t>> local(w);
    std::vector<std::thread> threads;
    threads.reserve(w);
    for (int t = 0; t < w; ++t) {
      const size_t lo = prev.size() * t / w;
      const size_t hi = prev.size() * (t + 1) / w;
      threads.emplace_back([&, lo, hi, t] { scan(lo, hi, local[t]); });
    }
    for (auto& th : threads) th.join();
    for (const auto& l : local) keyset.insert(l.begin(), l.end());
  }
  std::vector<uint64_t> keys(keyset.begin(), keyset.end());
  return sorted_graphs(k + 1, keys);
}

}  // namespace specgraph
