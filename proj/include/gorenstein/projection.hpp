#pragma once

#include <span>
#include <vector>

#include "gorenstein/algebra.hpp"

namespace gorenstein {

/// Admissible projection pi(u) = lambda(u) * e onto Ann(m), with
/// lambda(e) == 1. kernel_basis is an ordered basis k_1..k_n of
/// K = ker(lambda); its order fixes the coordinates of the graph polynomial.
struct Projection {
  Vec e;
  Vec lambda;
  std::vector<Vec> kernel_basis;

  std::size_t n() const noexcept { return kernel_basis.size(); }
  std::size_t dim() const noexcept { return e.size(); }
  Scalar functional(const Vec& u) const { return dot(lambda, u); }
  Subspace kernel() const { return Subspace::span(kernel_basis, dim()); }
  /// Columns k_1..k_n, e.
  Matrix adapted_basis() const;
};

/// Projection from a generator e of Ann(m) and a functional with
/// lambda(e) == 1; the kernel basis is read off the echelon form of lambda.
/// Throws PropertyFailure unless A is Gorenstein, MalformedInput when e or
/// lambda is inconsistent.
Projection make_projection(const Algebra& a, const Vec& e, const Vec& lambda);

/// Projection with the given ordered kernel basis and generator e.
/// The kernel must be a hyperplane complementary to Ann(m).
Projection projection_with_kernel(const Algebra& a, const Vec& e, std::span<const Vec> kernel_basis);

/// Graded input: K = A_1 + ... + A_{d-1} over the basis vectors of degree
/// below d, e = the basis vector of degree d. Otherwise e is the reduced
/// echelon generator of Ann(m) and K is spanned by the remaining standard
/// basis vectors.
Projection canonical_projection(const Algebra& a);

/// Hyperplane {k + c(k) e : k in K} of base as a projection, with kernel
/// basis k_i + c_i e and generator scale * e.
Projection projection_from_graph(const Algebra& a, const Projection& base, const Vec& graph_coeffs,
                                 const Scalar& scale = Scalar(1));

}  // namespace gorenstein
