#pragma once

#include "adeh/cyclo.hpp"
#include "adeh/errors.hpp"

#include <cstddef>
#include <vector>

namespace adeh {

/// Small dense row-major matrix. T needs +, -, * and value semantics; callers
/// pass the zero explicitly so CycloNum matrices carry the right field order.
template <class T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T &fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      c.push_back((*this)(i, j));
    return c;
  }

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<long>;
using CycloMatrix = Matrix<CycloNum>;
using IntVector = std::vector<long>;
using CycloVector = std::vector<CycloNum>;

template <class T> Matrix<T> identity(std::size_t n, const T &zero, const T &one) {
  Matrix<T> m(n, n, zero);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = one;
  return m;
}

template <class T> Matrix<T> multiply(const Matrix<T> &a, const Matrix<T> &b, const T &zero) {
  if (a.cols() != b.rows())
    throw UsageError("matrix product dimension mismatch");
  Matrix<T> c(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) += a(i, k) * b(k, j);
  return c;
}

inline IntMatrix multiply(const IntMatrix &a, const IntMatrix &b) { return multiply<long>(a, b, 0L); }

inline IntVector apply(const IntMatrix &m, const IntVector &v) {
  IntVector out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i] += m(i, j) * v[j];
  return out;
}

/// Integer matrix acting on a cyclotomic vector.
CycloVector apply(const IntMatrix &m, const CycloVector &v);
CycloVector apply(const CycloMatrix &m, const CycloVector &v);
CycloMatrix multiply(const CycloMatrix &a, const CycloMatrix &b);
CycloMatrix to_cyclo(const IntMatrix &m, int order);

/// Solves A x = b over Q(ζ_n) by Gaussian elimination. Throws InvariantError
/// when A is singular.
CycloVector solve(const CycloMatrix &a, const CycloVector &b);

/// Rank of the matrix whose columns are the given vectors.
std::size_t rank(const std::vector<CycloVector> &columns);

/// Solves A x = b over Q. Throws InvariantError when A is singular.
std::vector<Rational> solve(const Matrix<Rational> &a, const std::vector<Rational> &b);

} // namespace adeh
