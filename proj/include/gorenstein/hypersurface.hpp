#pragma once

#include <span>
#include <vector>

#include "gorenstein/affine_map.hpp"
#include "gorenstein/projection.hpp"

namespace gorenstein {

/// Symmetric 3-tensor h[i][j][k].
using Tensor3 = std::vector<std::vector<Vec>>;

/// S_pi written as the graph alpha_0 = P(alpha_1, ..., alpha_n) over the
/// coordinates u = sum alpha_i k_i + alpha_0 e.
struct GraphPoly {
  Projection projection;
  MultiPoly poly;
  /// Quadratic coefficient tensor: P_2(alpha) = sum g_ij alpha_i alpha_j.
  Matrix g;
  /// Symmetrized cubic coefficient tensor.
  Tensor3 h;
  /// Maps m-coordinates to (alpha_1, ..., alpha_n, alpha_0).
  Matrix to_graph_coords;

  std::size_t n() const noexcept { return projection.n(); }
  std::size_t dim() const noexcept { return projection.dim(); }
};

struct GramReport {
  /// Gram matrix of lambda(ac) over the basis 1, e_1, ..., e_N of A.
  Matrix gram;
  Scalar determinant;
  bool nondegenerate = false;
  /// Non-degeneracy of the restriction to K x K.
  bool kernel_nondegenerate = false;
};

/// Gram matrix of b_pi(a, c) = pi(ac) (pi(1) = 0). A degenerate form on a
/// Gorenstein algebra throws TheoremContradiction.
GramReport bilinear_form(const Algebra& a, const Projection& pi);

/// Whether lambda(2u + u^2) == 0.
bool quadric_member(const Algebra& a, const Projection& pi, const Vec& u);

/// <alpha, beta> = -1/2 lambda(alpha beta) on K; Q'_pi is alpha_0 = <alpha, alpha>.
Scalar quadric_form(const Algebra& a, const Projection& pi, const Vec& alpha, const Vec& beta);

/// The affine map alpha -> alpha + beta, alpha_0 -> alpha_0 + 2<alpha,beta> + <beta,beta>,
/// expressed on m-coordinates. Verified to preserve Q'_pi; beta must lie in K.
AffineMap quadric_translation(const Algebra& a, const Projection& pi, const Vec& beta);

/// lambda(2w + w^2) for w = f(q(alpha)), q the parametrization of Q'_pi
/// over K; the zero polynomial iff f maps Q'_pi into itself.
MultiPoly quadric_residual(const Algebra& a, const Projection& pi, const AffineMap& f);

/// P(a) = -1/2 lambda(exp(2 sum a_i k_i) - 1) with its quadratic and cubic
/// tensors. Throws PropertyFailure when n == 0 (then S_pi = {0}).
GraphPoly compute_graph(const Algebra& a, const Projection& pi);

/// Point sum a_i k_i + P(a) e of S_pi.
Vec graph_point(const GraphPoly& gp, const Vec& params);
/// The same point with symbolic parameters (n variables).
std::vector<MultiPoly> graph_parametrization(const GraphPoly& gp);
/// (alpha_1, ..., alpha_n, alpha_0) of u.
Vec graph_coords(const GraphPoly& gp, const Vec& u);

/// alpha_0(w) - P(alpha(w)) for a point with polynomial coordinates.
MultiPoly graph_residual(const GraphPoly& gp, std::span<const MultiPoly> point);
bool on_surface(const GraphPoly& gp, const Vec& u);

/// Residual of f(S_pi) against S_target: zero iff f(source) is contained in
/// target as an exact polynomial identity.
MultiPoly surface_image_residual(const GraphPoly& source, const AffineMap& f, const GraphPoly& target);

struct BlaschkeResult {
  Vec residuals;
  bool in_normal_form = false;
};

/// sum_ij g^{ij} h_ijk for each k. Singular g throws TheoremContradiction.
BlaschkeResult blaschke_check(const GraphPoly& gp);

/// x with S_{pi'} = S_pi + x, verified as polynomial identities in both
/// directions.
Vec translate_projection(const Algebra& a, const Projection& pi, const Projection& pi_prime);

/// exp(-2u) K for u on S_pi.
Subspace psi_map(const Algebra& a, const Projection& pi, const Vec& u);
/// u = 1/2 log(1 + x) with (1+x)^{-1} K == target; psi_map(u) == target.
Vec psi_inverse(const Algebra& a, const Projection& pi, const Subspace& target);

/// Whether u lies on S_pi, i.e. lambda(exp(2u) - 1) == 0.
bool surface_member(const Algebra& a, const Projection& pi, const Vec& u);

}  // namespace gorenstein
