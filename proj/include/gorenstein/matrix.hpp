#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gorenstein/scalar.hpp"

namespace gorenstein {

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors, each of length `rows`.
  static Matrix from_columns(std::span<const Vec> columns, std::size_t rows);
  static Matrix from_rows(std::span<const Vec> rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  std::vector<Vec> columns() const;
  void set_column(std::size_t c, const Vec& v);

  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vec operator*(const Matrix& a, const Vec& v);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& a);

/// Reduced row echelon form together with the pivot column of each
/// nonzero row.
struct EchelonForm {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

EchelonForm rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of the null space, one vector per free column.
std::vector<Vec> kernel_basis(const Matrix& m);

struct LinearSolution {
  Vec x;
  std::vector<Vec> kernel;
};

/// One solution of a*x == b plus a basis of ker(a); nullopt when b is not in
/// the column space.
std::optional<LinearSolution> solve_linear(const Matrix& a, const Vec& b);

Scalar determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Whether the columns of u and v span the same subspace. Both inputs must
/// have independent columns (MalformedInput otherwise).
bool subspace_equal(const Matrix& u, const Matrix& v);

/// Exponential of a nilpotent square matrix; throws PropertyFailure when the
/// matrix is not nilpotent.
Matrix nilpotent_exp(const Matrix& m);

std::vector<std::vector<std::string>> to_strings(const Matrix& m);
Matrix parse_matrix(const std::vector<std::vector<std::string>>& rows);

}  // namespace gorenstein
