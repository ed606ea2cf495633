#include "gorenstein/affine_map.hpp"

#include "gorenstein/errors.hpp"

namespace gorenstein {

AffineMap AffineMap::identity(std::size_t dim) { return {Matrix::identity(dim), zero_vec(dim)}; }

AffineMap AffineMap::translation_by(const Vec& t) { return {Matrix::identity(t.size()), t}; }

Vec AffineMap::apply(const Vec& u) const { return linear * u + translation; }

std::vector<MultiPoly> AffineMap::apply(std::span<const MultiPoly> u) const {
  if (u.size() != linear.cols()) throw MalformedInput("affine map arity mismatch");
  std::vector<MultiPoly> out(linear.rows());
  for (std::size_t r = 0; r < linear.rows(); ++r) {
    out[r] = linear_combination(linear.row(r), u);
    out[r] += MultiPoly::constant(0, translation[r]);
  }
  return out;
}

AffineMap AffineMap::inverse() const {
  const auto inv = gorenstein::inverse(linear);
  if (!inv) throw VerificationFailure("affine map has a singular linear part");
  return {*inv, -(*inv * translation)};
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  return {f.linear * g.linear, f.linear * g.translation + f.translation};
}

}  // namespace gorenstein
