#include "specgraph/matrix.hpp"

namespace specgraph {

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  RationalMatrix p(rows_, o.cols_);
  Rational term;
  for (int r = 0; r < rows_; ++r) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& v = (*this)(r, k);
      if (v == 0) continue;
      for (int c = 0; c < o.cols_; ++c) {
        if (o(k, c) == 0) continue;
        term = v * o(k, c);
        p(r, c) += term;
      }
    }
  }
  return p;
}

RationalMatrix RationalMatrix::operator-() const {
  RationalMatrix m(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m(r, c) = -(*this)(r, c);
  return m;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  RationalMatrix m(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c) - o(r, c);
  return m;
}

IntMatrix adjacency_matrix(const Graph& g) {
  const int n = g.order();
  IntMatrix m(n, n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v)) {
        m(u, v) = 1;
        m(v, u) = 1;
      }
  return m;
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix q(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) q(r, c) = m(r, c);
  return q;
}

std::vector<double> to_double(const RationalMatrix& m) {
  std::vector<double> d(size_t(m.rows()) * m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) d[size_t(r) * m.cols() + c] = m(r, c).get_d();
  return d;
}

std::vector<double> to_double(const IntMatrix& m) {
  std::vector<double> d(size_t(m.rows()) * m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) d[size_t(r) * m.cols() + c] = m(r, c).get_d();
  return d;
}

}  // namespace specgraph
