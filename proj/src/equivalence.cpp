#include "gorenstein/equivalence.hpp"

namespace gorenstein {

namespace {

std::vector<std::size_t> power_dims(const Algebra& a) {
  std::vector<std::size_t> dims;
  for (const auto& p : ideal_powers(a)) dims.push_back(p.dim());
  return dims;
}

}  // namespace

Algebra reconstruct_algebra(const GraphPoly& gp, const std::string& name) {
  const std::size_t n = gp.n();
  const auto ginv = inverse(gp.g);
  if (!ginv) throw VerificationFailure("quadratic tensor is degenerate");
  const std::size_t dim = n + 1;
  std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim, zero_vec(dim)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec rhs(n);
      for (std::size_t k = 0; k < n; ++k) rhs[k] = frac(3, 2) * gp.h[i][j][k];
      const Vec w = *ginv * rhs;
      Vec& prod = table[i][j];
      for (std::size_t k = 0; k < n; ++k) prod[k] = w[k];
      prod[n] = -gp.g(i, j);
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("k" + std::to_string(i + 1));
  labels.push_back("e");
  Algebra out(name, std::move(labels), std::move(table));
  const ValidationReport report = validate(out);
  if (!report.ok()) throw VerificationFailure("input tensors not realizable: reconstructed product fails validation");
  if (!is_gorenstein(out)) throw VerificationFailure("input tensors not realizable: reconstruction is not Gorenstein");
  return out;
}

EquivalenceVerdict verify_affine_equivalence(const Algebra& a, const Projection& pi, const Algebra& b,
                                             const Projection& pib, const AffineMap& map) {
  EquivalenceVerdict v;
  if (a.dim() != b.dim() || map.linear.rows() != b.dim() || map.linear.cols() != a.dim() ||
      map.translation.size() != b.dim()) {
    v.reason = "dimension mismatch";
    return v;
  }
  if (power_dims(a) != power_dims(b)) {
    v.reason = "ideal-power dimensions differ";
    return v;
  }
  if (!inverse(map.linear)) throw VerificationFailure("linear part is singular");
  const bool linear_iso = is_multiplicative(a, b, map.linear);
  if (pi.n() == 0) {
    // S = {0} on both sides
    v.equivalent = is_zero(map.translation);
  } else {
    const GraphPoly source = compute_graph(a, pi);
    const GraphPoly target = compute_graph(b, pib);
    v.forward_residual = surface_image_residual(source, map, target);
    v.backward_residual = surface_image_residual(target, map.inverse(), source);
    v.equivalent = v.forward_residual.is_zero() && v.backward_residual.is_zero();
  }
  if (!v.equivalent) {
    v.reason = "map does not carry S_pi onto S_pi~";
    return v;
  }
  if (!linear_iso) {
    throw TheoremContradiction("affine equivalence whose linear part is not an isomorphism",
                               a.name() + " -> " + b.name());
  }
  v.isomorphism = map.linear;
  v.reason = "affine equivalence; linear part is an algebra isomorphism";
  return v;
}

ScaledVerdict verify_scaled_linear_equivalence(const GraphPoly& source, const GraphPoly& target, const Matrix& c,
                                               const Scalar& s) {
  ScaledVerdict v;
  v.source_blaschke = blaschke_check(source).in_normal_form;
  v.target_blaschke = blaschke_check(target).in_normal_form;
  if (!v.source_blaschke || !v.target_blaschke) return v;
  if (c.rows() != target.n() || c.cols() != source.n()) throw MalformedInput("C has wrong shape");
  if (!inverse(c)) throw VerificationFailure("C is singular");
  if (is_zero(s)) throw VerificationFailure("scale must be nonzero");
  std::vector<MultiPoly> vars;
  for (std::size_t i = 0; i < source.n(); ++i) vars.push_back(MultiPoly::variable(source.n(), i));
  std::vector<MultiPoly> image;
  for (std::size_t r = 0; r < c.rows(); ++r) image.push_back(MultiPoly(source.n()) + linear_combination(c.row(r), vars));
  v.residual = s * source.poly - poly_compose_collect(target.poly, image);
  v.equivalent = v.residual.is_zero();
  return v;
}

}  // namespace gorenstein
