#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& operator()(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const BigInt& operator()(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
      for (int c = r + 1; c < cols_; ++c)
        if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
  }

private:
  int rows_, cols_;
  std::vector<BigInt> a_;
};

/// Dense matrix of exact rationals; entries stay in lowest terms.
class RationalMatrix {
public:
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }

  static RationalMatrix identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator-() const;
  RationalMatrix operator-(const RationalMatrix& o) const;

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
      for (int c = r + 1; c < cols_; ++c)
        if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (v != 0) return false;
    return true;
  }

private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

IntMatrix adjacency_matrix(const Graph& g);
RationalMatrix to_rational(const IntMatrix& m);

/// Row-major double image, for handing exact matrices to the eigensolver.
std::vector<double> to_double(const RationalMatrix& m);
std::vector<double> to_double(const IntMatrix& m);

}  // namespace specgraph
