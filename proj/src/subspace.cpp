#include "gorenstein/subspace.hpp"

#include "gorenstein/errors.hpp"

namespace gorenstein {

Subspace::Subspace(const Matrix& columns) : ambient_(columns.rows()) {
  const EchelonForm ef = rref(columns.transpose());
  if (ef.pivots.size() != columns.cols()) {
    throw MalformedInput("subspace basis has dependent columns");
  }
  for (std::size_t r = 0; r < ef.pivots.size(); ++r) basis_.push_back(ef.reduced.row(r));
}

Subspace Subspace::span(std::span<const Vec> vectors, std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  if (vectors.empty()) return s;
  const EchelonForm ef = rref(Matrix::from_rows(vectors, ambient));
  for (std::size_t r = 0; r < ef.pivots.size(); ++r) s.basis_.push_back(ef.reduced.row(r));
  return s;
}

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  return s;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_columns(basis_, ambient_); }

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw MalformedInput("vector outside ambient space");
  if (is_zero(v)) return true;
  std::vector<Vec> rows = basis_;
  rows.push_back(v);
  return rank(Matrix::from_rows(rows, ambient_)) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_) {
    if (!contains(v)) return false;
  }
  return true;
}

bool Subspace::is_complement_of(const Subspace& other) const {
  if (other.ambient_ != ambient_ || dim() + other.dim() != ambient_) return false;
  std::vector<Vec> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return rows.empty() || rank(Matrix::from_rows(rows, ambient_)) == ambient_;
}

}  // namespace gorenstein
