#include "gorenstein/matrix.hpp"

#include <utility>

#include "gorenstein/errors.hpp"

namespace gorenstein {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::span<const Vec> columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Matrix Matrix::from_rows(std::span<const Vec> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw MalformedInput("ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vec> Matrix::columns() const {
  std::vector<Vec> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

void Matrix::set_column(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw MalformedInput("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!gorenstein::is_zero(x)) return false;
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw MalformedInput("matrix product dimension mismatch");
  Matrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  }
  return p;
}

Vec operator*(const Matrix& a, const Vec& v) {
  if (a.cols() != v.size()) throw MalformedInput("matrix-vector dimension mismatch");
  Vec r = zero_vec(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) r[i] += a(i, k) * v[k];
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw MalformedInput("matrix sum dimension mismatch");
  Matrix s(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j) + b(i, j);
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Scalar(-1) * b; }

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
  return r;
}

EchelonForm rref(Matrix m) {
  EchelonForm out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(lead_row, j));
    }
    const Scalar inv = 1 / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || is_zero(m(r, c))) continue;
      const Scalar f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= f * m(lead_row, j);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
  const EchelonForm ef = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ef.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) v[ef.pivots[r]] = -ef.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<LinearSolution> solve_linear(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw MalformedInput("right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const EchelonForm ef = rref(std::move(aug));
  if (!ef.pivots.empty() && ef.pivots.back() == a.cols()) return std::nullopt;
  LinearSolution sol;
  sol.x = zero_vec(a.cols());
  for (std::size_t r = 0; r < ef.pivots.size(); ++r) sol.x[ef.pivots[r]] = ef.reduced(r, a.cols());
  sol.kernel = kernel_basis(a);
  return sol;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw MalformedInput("determinant of non-square matrix");
  Matrix w = m;
  Scalar det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && is_zero(w(pivot, c))) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w(pivot, j), w(c, j));
      det = -det;
    }
    det *= w(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (is_zero(w(r, c))) continue;
      const Scalar f = w(r, c) / w(c, c);
      for (std::size_t j = c; j < n; ++j) w(r, j) -= f * w(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw MalformedInput("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const EchelonForm ef = rref(std::move(aug));
  if (ef.pivots.size() < n || (n > 0 && ef.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ef.reduced(i, n + j);
  return inv;
}

bool subspace_equal(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows()) throw MalformedInput("subspaces live in different ambient spaces");
  if (rank(u) != u.cols() || rank(v) != v.cols()) {
    throw MalformedInput("subspace basis has dependent columns");
  }
  if (u.cols() != v.cols()) return false;
  return rref(u.transpose()).reduced == rref(v.transpose()).reduced;
}

Matrix nilpotent_exp(const Matrix& m) {
  if (m.rows() != m.cols()) throw MalformedInput("exponential of non-square matrix");
  const std::size_t n = m.rows();
  Matrix result = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = (Scalar(1) / Scalar(static_cast<long>(k))) * (term * m);
    if (term.is_zero()) return result;
    result = result + term;
  }
  throw PropertyFailure("matrix is not nilpotent");
}

std::vector<std::vector<std::string>> to_strings(const Matrix& m) {
  std::vector<std::vector<std::string>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_strings(m.row(r)));
  return out;
}

Matrix parse_matrix(const std::vector<std::vector<std::string>>& rows) {
  std::vector<Vec> parsed;
  for (const auto& r : rows) parsed.push_back(parse_vec(r));
  const std::size_t cols = parsed.empty() ? 0 : parsed.front().size();
  return Matrix::from_rows(parsed, cols);
}

}  // namespace gorenstein
