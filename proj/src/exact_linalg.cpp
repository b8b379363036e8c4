#include "specgraph/exact_linalg.hpp"

namespace specgraph {

BigInt det_integer(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant needs a square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (a(r, k) != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      for (int c = k; c < n; ++c) mpz_swap(a(k, c).get_mpz_t(), a(swap_row, c).get_mpz_t());
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        BigInt t = a(r, c) * a(k, k) - a(r, k) * a(k, c);
        mpz_divexact(a(r, c).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(r, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : BigInt(-a(n - 1, n - 1));
}

RrefResult rank_and_rref(const RationalMatrix& m) {
  RationalMatrix a = m;
  const int rows = a.rows(), cols = a.cols();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int r = row; r < rows; ++r)
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < cols; ++c) mpq_swap(a(row, c).get_mpq_t(), a(piv, c).get_mpq_t());
    const Rational inv_pivot = 1 / a(row, col);
    for (int c = col; c < cols; ++c) a(row, c) *= inv_pivot;
    for (int r = 0; r < rows; ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (int c = col; c < cols; ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::optional<RationalMatrix> invert_exact(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse needs a square matrix");
  const int n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RrefResult res = rank_and_rref(aug);
  if (static_cast<int>(res.pivots.size()) < n || res.pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv(r, c) = res.rref(r, n + c);
  return inv;
}

namespace {

// Pivot columns of the original matrix and the nonzero RREF rows; the
// product C R reconstructs the matrix.
struct FullRankFactors {
  RationalMatrix c;  // rows x rank
  RationalMatrix r;  // rank x cols
};

FullRankFactors full_rank_factorize(const RationalMatrix& a) {
  RrefResult res = rank_and_rref(a);
  const int rank = static_cast<int>(res.pivots.size());
  RationalMatrix c(a.rows(), rank), r(rank, a.cols());
  for (int i = 0; i < rank; ++i)
    for (int row = 0; row < a.rows(); ++row) c(row, i) = a(row, res.pivots[i]);
  for (int i = 0; i < rank; ++i)
    for (int col = 0; col < a.cols(); ++col) r(i, col) = res.rref(i, col);
  return {std::move(c), std::move(r)};
}

}  // namespace

RationalMatrix mp_pseudoinverse_exact(const RationalMatrix& a) {
  if (!a.is_symmetric())
    throw std::invalid_argument("mp_pseudoinverse_exact requires a symmetric matrix");
  const int n = a.rows();
  auto [c, r] = full_rank_factorize(a);
  const int rank = c.cols();
  if (rank == 0) return RationalMatrix(n, n);
  const RationalMatrix rt = r.transpose();
  const RationalMatrix ct = c.transpose();
  auto rrt_inv = invert_exact(r * rt);
  auto ctc_inv = invert_exact(ct * c);
  if (!rrt_inv || !ctc_inv)
    throw std::logic_error("full-rank factor Gram matrices must be invertible");
  return rt * (*rrt_inv) * (*ctc_inv) * ct;
}

bool verify_mp_axioms(const RationalMatrix& a, const RationalMatrix& x) {
  if (a.rows() != x.cols() || a.cols() != x.rows()) return false;
  const RationalMatrix ax = a * x;
  if (!(ax == ax.transpose())) return false;
  const RationalMatrix xa = x * a;
  if (!(xa == xa.transpose())) return false;
  if (!(ax * a == a)) return false;
  if (!(xa * x == x)) return false;
  return true;
}

RationalMatrix group_inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("group inverse needs a square matrix");
  const int n = m.rows();
  auto [f, g] = full_rank_factorize(m);
  if (f.cols() == 0) return RationalMatrix(n, n);
  const RationalMatrix gf = g * f;
  auto gf_inv = invert_exact(gf);
  if (!gf_inv) throw std::invalid_argument("group inverse requires matrix index <= 1");
  const RationalMatrix gf_inv2 = (*gf_inv) * (*gf_inv);
  return f * gf_inv2 * g;
}

}  // namespace specgraph
