#pragma once

#include <utility>
#include <vector>

#include "gorenstein/matrix.hpp"

namespace gorenstein {

/// Linear subspace of Q^n kept in a canonical reduced echelon basis, so
/// equality of subspaces is equality of the stored bases.
class Subspace {
 public:
  /// Span of independent columns; throws MalformedInput on dependence.
  explicit Subspace(const Matrix& columns);
  /// Span of arbitrary (possibly dependent) vectors in Q^ambient.
  static Subspace span(std::span<const Vec> vectors, std::size_t ambient);
  static Subspace zero(std::size_t ambient);

  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t ambient() const noexcept { return ambient_; }
  const std::vector<Vec>& basis() const& noexcept { return basis_; }
  std::vector<Vec> basis() && { return std::move(basis_); }
  Matrix basis_matrix() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Whether this and other intersect trivially and together span Q^n.
  bool is_complement_of(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  Subspace() = default;
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
};

}  // namespace gorenstein
