#include "gorenstein/sampling.hpp"

namespace gorenstein {

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

Vec random_vec(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Vec v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

Scalar random_nonzero(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  int v = 0;
  while (v == 0) v = dist(rng);
  return v;
}

Vec random_hyperplane_coeffs(std::mt19937_64& rng, const Projection& pi) { return random_vec(rng, pi.n()); }

Projection random_projection(std::mt19937_64& rng, const Algebra& a, const Projection& base) {
  const Vec coeffs = random_hyperplane_coeffs(rng, base);
  return projection_from_graph(a, base, coeffs, random_nonzero(rng));
}

Vec random_surface_point(std::mt19937_64& rng, const GraphPoly& gp, bool nonzero) {
  Vec params = random_vec(rng, gp.n());
  while (nonzero && is_zero(params)) params = random_vec(rng, gp.n());
  return graph_point(gp, params);
}

}  // namespace gorenstein
