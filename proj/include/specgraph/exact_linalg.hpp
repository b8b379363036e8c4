#pragma once

#include <optional>
#include <vector>

#include "specgraph/matrix.hpp"

namespace specgraph {

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt det_integer(const IntMatrix& m);

struct RrefResult {
  RationalMatrix rref;
  std::vector<int> pivots;  // pivot column per nonzero row; rank = pivots.size()
};

/// Reduced row-echelon form with pivot column indices.
RrefResult rank_and_rref(const RationalMatrix& m);

/// Exact inverse, or nothing when singular.
std::optional<RationalMatrix> invert_exact(const RationalMatrix& m);

/// Moore-Penrose pseudoinverse of a symmetric rational matrix via the
/// full-rank factorization A = C R (C = pivot columns, R = nonzero RREF
/// rows): X = R^T (R R^T)^-1 (C^T C)^-1 C^T. Entirely rational; equals
/// A^-1 when A is invertible. Throws on non-symmetric input.
RationalMatrix mp_pseudoinverse_exact(const RationalMatrix& a);

/// True iff all four Penrose identities hold exactly.
bool verify_mp_axioms(const RationalMatrix& a, const RationalMatrix& x);

/// Group inverse of a square matrix of index <= 1, via M = F G full-rank
/// factorization and M^# = F (G F)^-2 G. Throws when G F is singular
/// (index > 1).
RationalMatrix group_inverse(const RationalMatrix& m);

}  // namespace specgraph
