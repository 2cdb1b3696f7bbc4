#include "adeh/matrix.hpp"

namespace adeh {

CycloVector apply(const IntMatrix &m, const CycloVector &v) {
  if (v.size() != m.cols())
    throw UsageError("matrix-vector dimension mismatch");
  const int n = v.empty() ? 1 : v.front().order();
  CycloVector out(m.rows(), CycloNum::zero(n));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0)
        out[i] += v[j] * Rational(m(i, j));
  return out;
}

CycloVector apply(const CycloMatrix &m, const CycloVector &v) {
  if (v.size() != m.cols())
    throw UsageError("matrix-vector dimension mismatch");
  const int n = v.empty() ? 1 : v.front().order();
  CycloVector out(m.rows(), CycloNum::zero(n));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero())
        out[i] += m(i, j) * v[j];
  return out;
}

CycloMatrix multiply(const CycloMatrix &a, const CycloMatrix &b) {
  const int n = a.rows() ? a(0, 0).order() : 1;
  return multiply<CycloNum>(a, b, CycloNum::zero(n));
}

CycloMatrix to_cyclo(const IntMatrix &m, int order) {
  CycloMatrix out(m.rows(), m.cols(), CycloNum::zero(order));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = CycloNum(order, Rational(m(i, j)));
  return out;
}

namespace {

template <class T, class IsZero>
std::vector<T> gauss_solve(Matrix<T> a, std::vector<T> b, IsZero is_zero) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n)
    throw UsageError("solve requires a square system");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(a(pivot, col)))
      ++pivot;
    if (pivot == n)
      throw InvariantError("singular linear system");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a(col, j), a(pivot, j));
      std::swap(b[col], b[pivot]);
    }
    const T inv = T(1) / a(col, col);
    for (std::size_t j = col; j < n; ++j)
      a(col, j) = a(col, j) * inv;
    b[col] = b[col] * inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col)))
        continue;
      const T f = a(r, col);
      for (std::size_t j = col; j < n; ++j)
        a(r, j) = a(r, j) - f * a(col, j);
      b[r] = b[r] - f * b[col];
    }
  }
  return b;
}

} // namespace

CycloVector solve(const CycloMatrix &a, const CycloVector &b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n)
    throw UsageError("solve requires a square system");
  CycloMatrix m = a;
  CycloVector rhs = b;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero())
      ++pivot;
    if (pivot == n)
      throw InvariantError("singular linear system over the cyclotomic field");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m(col, j), m(pivot, j));
      std::swap(rhs[col], rhs[pivot]);
    }
    const CycloNum inv = m(col, col).inverse();
    for (std::size_t j = col; j < n; ++j)
      m(col, j) *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero())
        continue;
      const CycloNum f = m(r, col);
      for (std::size_t j = col; j < n; ++j)
        if (!m(col, j).is_zero())
          m(r, j) -= f * m(col, j);
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

std::size_t rank(const std::vector<CycloVector> &columns) {
  if (columns.empty())
    return 0;
  const std::size_t rows = columns.front().size();
  std::vector<CycloVector> m = columns; // each entry is a column; eliminate on rows
  std::size_t r = 0;
  for (std::size_t row = 0; row < rows && r < m.size(); ++row) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][row].is_zero())
      ++pivot;
    if (pivot == m.size())
      continue;
    std::swap(m[r], m[pivot]);
    const CycloNum inv = m[r][row].inverse();
    for (std::size_t c = r + 1; c < m.size(); ++c) {
      if (m[c][row].is_zero())
        continue;
      const CycloNum f = m[c][row] * inv;
      for (std::size_t i = row; i < rows; ++i)
        m[c][i] -= f * m[r][i];
    }
    ++r;
  }
  return r;
}

std::vector<Rational> solve(const Matrix<Rational> &a, const std::vector<Rational> &b) {
  return gauss_solve<Rational>(a, b, [](const Rational &x) { return sgn(x) == 0; });
}

} // namespace adeh
