#pragma once

#include <span>
#include <vector>

#include "gorenstein/matrix.hpp"
#include "gorenstein/multipoly.hpp"

namespace gorenstein {

/// u -> linear * u + translation on m-coordinates.
struct AffineMap {
  Matrix linear;
  Vec translation;

  static AffineMap identity(std::size_t dim);
  static AffineMap translation_by(const Vec& t);

  std::size_t dim() const noexcept { return translation.size(); }
  Vec apply(const Vec& u) const;
  std::vector<MultiPoly> apply(std::span<const MultiPoly> u) const;
  /// Throws VerificationFailure when the linear part is singular.
  AffineMap inverse() const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// (f o g)(u) = f(g(u)).
AffineMap compose(const AffineMap& f, const AffineMap& g);

}  // namespace gorenstein
