#pragma once

#include <optional>
#include <string>

#include "gorenstein/affine_map.hpp"
#include "gorenstein/hypersurface.hpp"

namespace gorenstein {

/// Rebuilds m over the basis (k_1, ..., k_n, e) from the quadratic and
/// cubic tensors of P: lambda(uv) = -g(u,v), lambda(uvw) = -3/2 h(u,v,w),
/// and the K-component w of k_i k_j solves g(w, k) = 3/2 h(k_i, k_j, k).
/// Throws VerificationFailure when the result is not a Gorenstein algebra
/// (tensors that no algebra realizes).
Algebra reconstruct_algebra(const GraphPoly& gp, const std::string& name = "reconstructed");

struct EquivalenceVerdict {
  bool equivalent = false;
  std::string reason;
  /// Linear part of the map, when it is an algebra isomorphism.
  std::optional<Matrix> isomorphism;
  MultiPoly forward_residual;
  MultiPoly backward_residual;
};

/// Whether map(S_pi) == S_pi~ as polynomial identities in both directions;
/// the linear part is then checked to be an isomorphism m -> m~, and the
/// two verdicts must agree.
EquivalenceVerdict verify_affine_equivalence(const Algebra& a, const Projection& pi, const Algebra& b,
                                             const Projection& pib, const AffineMap& map);

struct ScaledVerdict {
  bool source_blaschke = false;
  bool target_blaschke = false;
  bool equivalent = false;
  /// s P(alpha) - P~(C alpha)
  MultiPoly residual;
};

/// Whether s * P(alpha) == P~(C alpha) identically, after checking both
/// polynomials are in Blaschke normal form.
ScaledVerdict verify_scaled_linear_equivalence(const GraphPoly& source, const GraphPoly& target, const Matrix& c,
                                               const Scalar& s);

}  // namespace gorenstein
