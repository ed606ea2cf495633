#pragma once

#include <cstdint>
#include <random>

#include "gorenstein/hypersurface.hpp"

namespace gorenstein {

/// Generator for sample `index` of a run seeded with `seed`; samples are
/// independent of evaluation order.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

/// Integer coordinates drawn uniformly from [lo, hi].
Vec random_vec(std::mt19937_64& rng, std::size_t n, int lo = -9, int hi = 9);
Scalar random_nonzero(std::mt19937_64& rng, int lo = -9, int hi = 9);

/// Graph coefficients of a random hyperplane complementary to Ann(m).
Vec random_hyperplane_coeffs(std::mt19937_64& rng, const Projection& pi);

/// Random admissible projection: random complementary kernel and a random
/// nonzero rescaling of e.
Projection random_projection(std::mt19937_64& rng, const Algebra& a, const Projection& base);

/// Random point of S_pi with integer graph parameters; nonzero when
/// `nonzero` is set and n >= 1.
Vec random_surface_point(std::mt19937_64& rng, const GraphPoly& gp, bool nonzero = false);

}  // namespace gorenstein
