#pragma once

#include "gorenstein/projection.hpp"

namespace gorenstein {

// Hyperplanes complementary to Ann(m) ("targets") relative to the kernel
// K of a fixed projection. Every target can be written as (1+x)^{-1} K and
// as (1+y) K with x, y in K.

/// w * S for a unital (or any) element w and subspace S.
Subspace multiply_subspace(const Algebra& a, const Element& w, const Subspace& s);

/// Target {k + c(k) e : k in K} from the coefficients c_i = c(k_i).
Subspace hyperplane_from_graph(const Projection& pi, const Vec& graph_coeffs);

/// Inverse of hyperplane_from_graph; throws MalformedInput when the
/// subspace is not a hyperplane complementary to Ann(m).
Vec graph_coeffs_of(const Projection& pi, const Subspace& target);

/// Matrix of x -> (u -> lambda(x u)) from K to functionals on the target,
/// in the bases k_i and the target's canonical basis.
Matrix pairing_matrix(const Algebra& a, const Projection& pi, const Subspace& target);

/// x in K with (1+x)^{-1} K == target, verified exactly.
Vec find_x(const Algebra& a, const Projection& pi, const Subspace& target);

/// y in K with (1+y) K == (1+x)^{-1} K, verified exactly.
Vec x_to_y(const Algebra& a, const Projection& pi, const Vec& x);

}  // namespace gorenstein
