#include "qtsym/linalg.hpp"

namespace qtsym {

namespace {

size_t weight(const ParamRat& x) { return x.num().terms().size() + x.den().terms().size(); }

}  // namespace

Matrix identity_matrix(size_t n) {
  Matrix m = zero_matrix(n, n);
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix zero_matrix(size_t rows, size_t cols) { return Matrix(rows, Vector(cols)); }

Matrix multiply(const Matrix& a, const Matrix& b) {
  size_t inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  Matrix c = zero_matrix(a.size(), cols);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < cols; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix t = zero_matrix(a[0].size(), a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Vector row_times(const Vector& v, const Matrix& a) {
  Vector r(a.empty() ? 0 : a[0].size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (size_t j = 0; j < r.size(); ++j)
      if (!a[i][j].is_zero()) r[j] += v[i] * a[i][j];
  }
  return r;
}

Vector times_column(const Matrix& a, const Vector& v) {
  Vector r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (!a[i][j].is_zero() && !v[j].is_zero()) r[i] += a[i][j] * v[j];
  return r;
}

Matrix solve(const Matrix& a, const Matrix& b) {
  size_t n = a.size();
  size_t cols = b.empty() ? 0 : b[0].size();
  Matrix m = a, rhs = b;
  for (size_t c = 0; c < n; ++c) {
    size_t pivot = n;
    for (size_t r = c; r < n; ++r)
      if (!m[r][c].is_zero() && (pivot == n || weight(m[r][c]) < weight(m[pivot][c]))) pivot = r;
    if (pivot == n) throw SingularMatrix("singular matrix of size " + std::to_string(n));
    std::swap(m[c], m[pivot]);
    std::swap(rhs[c], rhs[pivot]);
    ParamRat inv = 1 / m[c][c];
    for (size_t j = c; j < n; ++j) m[c][j] *= inv;
    for (size_t j = 0; j < cols; ++j) rhs[c][j] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      ParamRat f = m[r][c];
      for (size_t j = c; j < n; ++j)
        if (!m[c][j].is_zero()) m[r][j] -= f * m[c][j];
      for (size_t j = 0; j < cols; ++j)
        if (!rhs[c][j].is_zero()) rhs[r][j] -= f * rhs[c][j];
    }
  }
  return rhs;
}

Vector solve(const Matrix& a, const Vector& b) {
  Matrix col(b.size(), Vector(1));
  for (size_t i = 0; i < b.size(); ++i) col[i][0] = b[i];
  Matrix x = solve(a, col);
  Vector r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = x[i][0];
  return r;
}

Vector solve_overdetermined(const Matrix& a, const Vector& b) {
  size_t rows = a.size(), n = rows == 0 ? 0 : a[0].size();
  Matrix m = a;
  Vector rhs = b;
  std::vector<size_t> pivot_row(n);
  size_t next = 0;
  for (size_t c = 0; c < n; ++c) {
    size_t pivot = rows;
    for (size_t r = next; r < rows; ++r)
      if (!m[r][c].is_zero() && (pivot == rows || weight(m[r][c]) < weight(m[pivot][c]))) pivot = r;
    if (pivot == rows) throw SingularMatrix("rank-deficient system in column " + std::to_string(c));
    std::swap(m[next], m[pivot]);
    std::swap(rhs[next], rhs[pivot]);
    ParamRat inv = 1 / m[next][c];
    for (size_t j = c; j < n; ++j) m[next][j] *= inv;
    rhs[next] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == next || m[r][c].is_zero()) continue;
      ParamRat f = m[r][c];
      for (size_t j = c; j < n; ++j)
        if (!m[next][j].is_zero()) m[r][j] -= f * m[next][j];
      if (!rhs[next].is_zero()) rhs[r] -= f * rhs[next];
    }
    pivot_row[c] = next++;
  }
  for (size_t r = next; r < rows; ++r)
    if (!rhs[r].is_zero()) throw InconsistentSystem("overdetermined system has no solution");
  Vector x(n);
  for (size_t c = 0; c < n; ++c) x[c] = rhs[pivot_row[c]];
  return x;
}

Matrix inverse(const Matrix& a) { return solve(a, identity_matrix(a.size())); }

bool is_upper_triangular(const Matrix& a) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < i && j < a[i].size(); ++j)
      if (!a[i][j].is_zero()) return false;
  return true;
}

}  // namespace qtsym
