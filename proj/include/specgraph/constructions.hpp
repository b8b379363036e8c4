#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specgraph/matrix.hpp"
#include "specgraph/spectral.hpp"

namespace specgraph {

Graph cycle_graph(int m);              // m >= 3
Graph path_graph(int m);               // m >= 1
Graph complete_graph(int k);           // k >= 1
Graph star_graph(int m);               // K_{m-1,1}, leaves first, center last
Graph complete_bipartite(int m1, int m2);
Graph kmm_minus_e(int m);              // K_{m,m} minus the edge (0, m)

/// Family dispatcher for the CLI mini-grammar: cycle, path, complete,
/// star, bipartite (or complete_bipartite), kmm-e.
Graph make_family(const std::string& name, const std::vector<int>& params);

/// Closed-form pseudoinverses from the circulant / tridiagonal / block
/// analyses; each equals mp_pseudoinverse_exact on its family.
RationalMatrix pinv_cycle_closed_form(int m);      // m >= 3
RationalMatrix pinv_path_closed_form(int m);       // m >= 2
RationalMatrix pinv_complete_bipartite(int m1, int m2);
RationalMatrix pinv_kmm_minus_e(int m);            // m >= 2

/// Blow-up description: vertex i of the base is replaced by an
/// independent set of size parts[i]; absent base means K_k.
struct PartitionSpec {
  std::vector<int> parts;
  std::optional<Graph> base;
};

Graph multipartitioned_expand(const PartitionSpec& spec);

/// m-k zeros plus the spectrum of M^(1/2) A M^(1/2), M = diag(parts).
Spectrum multipartitioned_spectrum(const PartitionSpec& spec,
                                   double zero_tol = kDefaultZeroTol);

/// Exact rational pseudoinverse of the expanded graph, computed on k x k
/// matrices only: the block coefficients are (A M)^# M^-1, which equals
/// the half-power form without leaving the rationals.
RationalMatrix pinv_multipartitioned(const PartitionSpec& spec);

/// One pendant vertex per base vertex: block adjacency [[0, I], [I, B]].
/// Pendants are vertices 0..k-1, the base occupies k..2k-1.
Graph corona(const Graph& base);

/// Integer inverse [[-B, I], [I, 0]] of the corona adjacency.
IntMatrix corona_inverse_closed_form(const Graph& base);

/// Spectral power of the corona from the base spectrum: sum of
/// sqrt(mu^2 + 4) over base eigenvalues.
double corona_power_index(const Spectrum& spectrum_of_base);

/// 2m-4 zeros and the four closed-form eigenvalues of K_{m,m} minus an
/// edge.
Spectrum kmm_minus_e_spectrum(int m, double zero_tol = kDefaultZeroTol);

}  // namespace specgraph
