#pragma once

#include <vector>

#include "specgraph/matrix.hpp"

namespace specgraph {

inline constexpr double kDefaultZeroTol = 1e-9;

/// Eigenvalues of a symmetric matrix, sorted descending.
struct Spectrum {
  std::vector<double> values;
  double zero_tol = kDefaultZeroTol;

  /// Eigenvalues below this magnitude are classified as zero.
  double zero_threshold() const;
};

/// Full symmetric eigensolve by cyclic Jacobi rotations; a is row-major
/// n x n. Throws on non-symmetric input.
Spectrum eigenvalues_symmetric(const std::vector<double>& a, int n,
                               double zero_tol = kDefaultZeroTol);

/// Eigensolve keeping the rotation product, for residual checks.
/// vectors is row-major; column k pairs with values[k].
struct EigenSystem {
  int n = 0;
  std::vector<double> values;   // descending
  std::vector<double> vectors;  // n x n, column k = eigenvector k
};
EigenSystem eigen_system_symmetric(const std::vector<double>& a, int n);

Spectrum graph_spectrum(const Graph& g, double zero_tol = kDefaultZeroTol);

struct SpectralIndices {
  double lambda_max = 0;
  double lambda_min = 0;
  double lambda_plus = 0;   // least positive eigenvalue
  double lambda_minus = 0;  // largest negative eigenvalue
  double gap = 0;           // lambda_plus - lambda_minus
  double ind = 0;           // max(|lambda_plus|, |lambda_minus|)
  double pow = 0;           // sum of |eigenvalues|
};

/// Indices from a spectrum; zeros are excluded by the spectrum's zero
/// classification. Throws std::domain_error when the spectrum has no
/// positive or no negative part.
SpectralIndices spectral_indices(const Spectrum& s);

SpectralIndices indices_of_graph(const Graph& g, double zero_tol = kDefaultZeroTol);

/// gap and ind recovered from the eigenvalues of the exact pseudoinverse
/// via the reciprocal relation; lambda_max/lambda_min/pow come from the
/// direct spectrum of the adjacency matrix.
SpectralIndices reciprocal_indices_from_pinv(const IntMatrix& adjacency,
                                             double zero_tol = kDefaultZeroTol);

}  // namespace specgraph
