#include "specgraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "specgraph/exact_linalg.hpp"

namespace specgraph {

namespace {

double frobenius(const std::vector<double>& a) {
  double s = 0;
  for (double v : a) s += v * v;
  return std::sqrt(s);
}

double offdiag_frobenius(const std::vector<double>& a, int n) {
  double s = 0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (r != c) s += a[size_t(r) * n + c] * a[size_t(r) * n + c];
  return std::sqrt(s);
}

void check_symmetric(const std::vector<double>& a, int n) {
  if (static_cast<size_t>(n) * n != a.size())
    throw std::invalid_argument("matrix size does not match order");
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c)
      if (a[size_t(r) * n + c] != a[size_t(c) * n + r])
        throw std::invalid_argument("eigensolver requires a symmetric matrix");
}

// Cyclic Jacobi sweeps until the off-diagonal Frobenius norm drops below
// 1e-14 * ||A||_F.
void jacobi(std::vector<double>& a, int n, std::vector<double>* vectors) {
  if (vectors) {
    vectors->assign(size_t(n) * n, 0.0);
    for (int i = 0; i < n; ++i) (*vectors)[size_t(i) * n + i] = 1.0;
  }
  const double norm = frobenius(a);
  if (norm == 0.0 || n == 1) return;
  const double stop = 1e-14 * norm;
  auto at = [&](int r, int c) -> double& { return a[size_t(r) * n + c]; };

  for (int sweep = 0; sweep < 64; ++sweep) {
    if (offdiag_frobenius(a, n) < stop) return;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) < stop / (double(n) * n)) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        if (vectors) {
          for (int k = 0; k < n; ++k) {
            double& vkp = (*vectors)[size_t(k) * n + p];
            double& vkq = (*vectors)[size_t(k) * n + q];
            const double tp = vkp, tq = vkq;
            vkp = c * tp - s * tq;
            vkq = s * tp + c * tq;
          }
        }
      }
    }
  }
  if (offdiag_frobenius(a, n) >= stop)
    throw std::runtime_error("Jacobi eigensolver did not converge");
}

}  // namespace

double Spectrum::zero_threshold() const {
  double maxabs = 0;
  for (double v : values) maxabs = std::max(maxabs, std::abs(v));
  return zero_tol * std::max(1.0, maxabs);
}

EigenSystem eigen_system_symmetric(const std::vector<double>& a, int n) {
  check_symmetric(a, n);
  std::vector<double> work = a;
  std::vector<double> vectors;
  jacobi(work, n, &vectors);
  EigenSystem sys;
  sys.n = n;
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = work[size_t(i) * n + i];
  std::sort(idx.begin(), idx.end(), [&](int x, int y) { return diag[x] > diag[y]; });
  sys.values.resize(n);
  sys.vectors.assign(size_t(n) * n, 0.0);
  for (int k = 0; k < n; ++k) {
    sys.values[k] = diag[idx[k]];
    for (int r = 0; r < n; ++r) sys.vectors[size_t(r) * n + k] = vectors[size_t(r) * n + idx[k]];
  }
  return sys;
}

Spectrum eigenvalues_symmetric(const std::vector<double>& a, int n, double zero_tol) {
  check_symmetric(a, n);
  std::vector<double> work = a;
  jacobi(work, n, nullptr);
  Spectrum s;
  s.zero_tol = zero_tol;
  s.values.resize(n);
  for (int i = 0; i < n; ++i) s.values[i] = work[size_t(i) * n + i];
  std::sort(s.values.begin(), s.values.end(), std::greater<double>());
  return s;
}

Spectrum graph_spectrum(const Graph& g, double zero_tol) {
  return eigenvalues_symmetric(to_double(adjacency_matrix(g)), g.order(), zero_tol);
}

SpectralIndices spectral_indices(const Spectrum& s) {
  const double thresh = s.zero_threshold();
  SpectralIndices out;
  bool has_pos = false, has_neg = false;
  out.pow = 0;
  for (double v : s.values) {
    if (std::abs(v) < thresh) continue;
    out.pow += std::abs(v);
    if (v > 0) {
      if (!has_pos || v < out.lambda_plus) out.lambda_plus = v;
      has_pos = true;
    } else {
      if (!has_neg || v > out.lambda_minus) out.lambda_minus = v;
      has_neg = true;
    }
  }
  if (!has_pos || !has_neg)
    throw std::domain_error("spectrum needs a positive and a negative eigenvalue");
  out.lambda_max = s.values.front();
  out.lambda_min = s.values.back();
  out.gap = out.lambda_plus - out.lambda_minus;
  out.ind = std::max(std::abs(out.lambda_plus), std::abs(out.lambda_minus));
  return out;
}

SpectralIndices indices_of_graph(const Graph& g, double zero_tol) {
  return spectral_indices(graph_spectrum(g, zero_tol));
}

SpectralIndices reciprocal_indices_from_pinv(const IntMatrix& adjacency, double zero_tol) {
  const int n = adjacency.rows();
  const RationalMatrix pinv = mp_pseudoinverse_exact(to_rational(adjacency));
  const Spectrum sp = eigenvalues_symmetric(to_double(pinv), n, zero_tol);
  const Spectrum sa = eigenvalues_symmetric(to_double(adjacency), n, zero_tol);
  SpectralIndices out = spectral_indices(sa);
  const double pmax = sp.values.front();
  const double pmin = sp.values.back();
  if (pmax <= 0 || pmin >= 0)
    throw std::domain_error("pseudoinverse spectrum needs both signs");
  out.lambda_plus = 1.0 / pmax;
  out.lambda_minus = 1.0 / pmin;
  out.gap = out.lambda_plus - out.lambda_minus;
  out.ind = std::max(std::abs(out.lambda_plus), std::abs(out.lambda_minus));
  return out;
}

}  // namespace specgraph
