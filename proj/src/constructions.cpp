#include "specgraph/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "specgraph/exact_linalg.hpp"

namespace specgraph {

Graph cycle_graph(int m) {
  if (m < 3) throw std::domain_error("cycle needs m >= 3");
  Graph g(m);
  for (int v = 0; v < m; ++v) g.add_edge(v, (v + 1) % m);
  return g;
}

Graph path_graph(int m) {
  if (m < 1) throw std::domain_error("path needs m >= 1");
  Graph g(m);
  for (int v = 0; v + 1 < m; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete_graph(int k) {
  if (k < 1) throw std::domain_error("complete graph needs k >= 1");
  Graph g(k);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(int m) {
  if (m < 2) throw std::domain_error("star needs m >= 2");
  return complete_bipartite(m - 1, 1);
}

Graph complete_bipartite(int m1, int m2) {
  if (m1 < 1 || m2 < 1) throw std::domain_error("bipartite classes must be nonempty");
  Graph g(m1 + m2);
  for (int u = 0; u < m1; ++u)
    for (int v = 0; v < m2; ++v) g.add_edge(u, m1 + v);
  return g;
}

Graph kmm_minus_e(int m) {
  if (m < 2) throw std::domain_error("K_{m,m} minus an edge needs m >= 2");
  Graph g = complete_bipartite(m, m);
  g.remove_edge(0, m);
  return g;
}

Graph make_family(const std::string& name, const std::vector<int>& params) {
  auto need = [&](size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("family '" + name + "' expects " + std::to_string(k) +
                                  " parameter(s)");
  };
  if (name == "cycle") {
    need(1);
    return cycle_graph(params[0]);
  }
  if (name == "path") {
    need(1);
    return path_graph(params[0]);
  }
  if (name == "complete") {
    need(1);
    return complete_graph(params[0]);
  }
  if (name == "star") {
    need(1);
    return star_graph(params[0]);
  }
  if (name == "bipartite" || name == "complete_bipartite") {
    need(2);
    return complete_bipartite(params[0], params[1]);
  }
  if (name == "kmm-e" || name == "kmm_minus_e") {
    need(1);
    return kmm_minus_e(params[0]);
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

RationalMatrix pinv_cycle_closed_form(int m) {
  if (m < 3) throw std::domain_error("cycle needs m >= 3");
  // Circulant entries a+(p) by the case split on m mod 4, evaluated at the
  // symmetric representative |p| = min(d, m-d).
  std::vector<Rational> coef(m);
  for (int d = 0; d < m; ++d) {
    const int p = std::min(d, m - d);
    Rational v = 0;
    if (m % 4 == 0) {
      if (p % 2 == 1) {
        v = Rational(m / 2 - p, m);
        if (((p - 1) / 2) % 2 == 1) v = -v;
      }
    } else if (p % 2 == 1) {
      v = Rational(1, 2);
      if (((p - 1) / 2) % 2 == 1) v = -v;
    } else if (m % 4 == 1) {
      v = Rational(1, 2);
      if ((p / 2) % 2 == 1) v = -v;
    } else if (m % 4 == 3) {
      v = Rational(1, 2);
      if ((p / 2) % 2 == 0) v = -v;
    }
    v.canonicalize();
    coef[d] = v;
  }
  RationalMatrix x(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) x(i, j) = coef[((i - j) % m + m) % m];
  return x;
}

RationalMatrix pinv_path_closed_form(int m) {
  if (m < 2) throw std::domain_error("path pseudoinverse formula needs m >= 2");
  RationalMatrix x(m, m);
  // 1-based index formulas from the tridiagonal Toeplitz analysis.
  for (int i1 = 1; i1 <= m; ++i1) {
    for (int j1 = i1; j1 <= m; ++j1) {
      Rational v = 0;
      if (m % 2 == 0) {
        if (i1 % 2 == 1 && j1 % 2 == 0) {
          v = ((j1 - i1 - 1) / 2) % 2 == 0 ? 1 : -1;
        }
      } else if ((i1 + j1) % 2 == 1) {
        const int sign = ((j1 - i1 - 1) / 2) % 2 == 0 ? 1 : -1;
        if (i1 % 2 == 0)
          v = Rational(sign * i1, m + 1);
        else
          v = Rational(sign * (m - j1 + 1), m + 1);
        v.canonicalize();
      }
      x(i1 - 1, j1 - 1) = v;
      x(j1 - 1, i1 - 1) = v;
    }
  }
  return x;
}

RationalMatrix pinv_complete_bipartite(int m1, int m2) {
  const IntMatrix a = adjacency_matrix(complete_bipartite(m1, m2));
  RationalMatrix x(a.rows(), a.cols());
  const Rational w(1, static_cast<long>(m1) * m2);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) x(i, j) = w;
  return x;
}

RationalMatrix pinv_kmm_minus_e(int m) {
  if (m < 2) throw std::domain_error("K_{m,m} minus an edge needs m >= 2");
  // K+ = (e1 1^T + 1 e1^T - (m+1) e1 e1^T) / (m-1)
  RationalMatrix kp(m, m);
  const Rational off(1, m - 1);
  kp(0, 0) = -1;
  for (int j = 1; j < m; ++j) {
    kp(0, j) = off;
    kp(j, 0) = off;
  }
  RationalMatrix x(2 * m, 2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      x(i, m + j) = kp(j, i);  // (K+)^T block
      x(m + i, j) = kp(i, j);
    }
  return x;
}

namespace {

void validate_partition(const PartitionSpec& spec, const Graph& base) {
  if (spec.parts.empty()) throw std::invalid_argument("partition needs at least one part");
  for (int p : spec.parts)
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
  if (base.order() != static_cast<int>(spec.parts.size()))
    throw std::invalid_argument("base order must equal the number of parts");
  if (!is_connected(base)) throw std::domain_error("multipartitioned base must be connected");
}

Graph base_or_complete(const PartitionSpec& spec) {
  return spec.base ? *spec.base : complete_graph(static_cast<int>(spec.parts.size()));
}

}  // namespace

Graph multipartitioned_expand(const PartitionSpec& spec) {
  const Graph base = base_or_complete(spec);
  validate_partition(spec, base);
  const int k = base.order();
  std::vector<int> offset(k + 1, 0);
  for (int i = 0; i < k; ++i) offset[i + 1] = offset[i] + spec.parts[i];
  Graph g(offset[k]);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (!base.has_edge(i, j)) continue;
      for (int u = offset[i]; u < offset[i + 1]; ++u)
        for (int v = offset[j]; v < offset[j + 1]; ++v) g.add_edge(u, v);
    }
  return g;
}

Spectrum multipartitioned_spectrum(const PartitionSpec& spec, double zero_tol) {
  const Graph base = base_or_complete(spec);
  validate_partition(spec, base);
  const int k = base.order();
  const int m = std::accumulate(spec.parts.begin(), spec.parts.end(), 0);
  std::vector<double> reduced(size_t(k) * k, 0.0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (base.has_edge(i, j))
        reduced[size_t(i) * k + j] = std::sqrt(double(spec.parts[i]) * spec.parts[j]);
  const Spectrum core = eigenvalues_symmetric(reduced, k, zero_tol);
  Spectrum s;
  s.zero_tol = zero_tol;
  s.values = core.values;
  s.values.insert(s.values.end(), size_t(m - k), 0.0);
  std::sort(s.values.begin(), s.values.end(), std::greater<double>());
  return s;
}

RationalMatrix pinv_multipartitioned(const PartitionSpec& spec) {
  const Graph base = base_or_complete(spec);
  validate_partition(spec, base);
  const int k = base.order();
  // Block coefficients B = (A M)^# M^-1: the group inverse absorbs the
  // half powers of M, so everything stays rational.
  RationalMatrix am(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (base.has_edge(i, j)) am(i, j) = spec.parts[j];
  RationalMatrix b = group_inverse(am);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) b(i, j) /= spec.parts[j];

  std::vector<int> offset(k + 1, 0);
  for (int i = 0; i < k; ++i) offset[i + 1] = offset[i] + spec.parts[i];
  const int m = offset[k];
  RationalMatrix x(m, m);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (b(i, j) == 0) continue;
      for (int u = offset[i]; u < offset[i + 1]; ++u)
        for (int v = offset[j]; v < offset[j + 1]; ++v) x(u, v) = b(i, j);
    }
  return x;
}

Graph corona(const Graph& base) {
  const int k = base.order();
  Graph g(2 * k);
  for (int v = 0; v < k; ++v) g.add_edge(v, k + v);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v)
      if (base.has_edge(u, v)) g.add_edge(k + u, k + v);
  return g;
}

IntMatrix corona_inverse_closed_form(const Graph& base) {
  const int k = base.order();
  IntMatrix inv(2 * k, 2 * k);
  for (int u = 0; u < k; ++u) {
    inv(u, k + u) = 1;
    inv(k + u, u) = 1;
    for (int v = 0; v < k; ++v)
      if (base.has_edge(u, v)) inv(u, v) = -1;
  }
  return inv;
}

double corona_power_index(const Spectrum& spectrum_of_base) {
  double sum = 0;
  for (double mu : spectrum_of_base.values) sum += std::sqrt(mu * mu + 4.0);
  return sum;
}

Spectrum kmm_minus_e_spectrum(int m, double zero_tol) {
  if (m < 2) throw std::domain_error("K_{m,m} minus an edge needs m >= 2");
  const double root = std::sqrt(double(m) * m + 2.0 * m - 3.0);
  const double a = (1.0 - m + root) / 2.0;
  const double b = (1.0 - m - root) / 2.0;
  Spectrum s;
  s.zero_tol = zero_tol;
  s.values = {a, -a, b, -b};
  s.values.insert(s.values.end(), size_t(2 * m - 4), 0.0);
  std::sort(s.values.begin(), s.values.end(), std::greater<double>());
  return s;
}

}  // namespace specgraph
