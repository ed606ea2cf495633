#include "gorenstein/homogeneity.hpp"

#include <algorithm>

#include "gorenstein/sampling.hpp"
#include "gorenstein/series.hpp"
#include "gorenstein/transport.hpp"

namespace gorenstein {

namespace {

std::string describe(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + "]";
}

int degree_of(const GradedDecomposition& g, std::size_t index) {
  for (std::size_t j = 0; j < g.indices.size(); ++j) {
    if (std::find(g.indices[j].begin(), g.indices[j].end(), index) != g.indices[j].end()) return static_cast<int>(j);
  }
  return 0;
}

bool supported_on(const Vec& x, const std::vector<std::size_t>& indices) {
  for (std::size_t r = 0; r < x.size(); ++r) {
    if (!is_zero(x[r]) && std::find(indices.begin(), indices.end(), r) == indices.end()) return false;
  }
  return true;
}

Subspace image(const Matrix& linear, const Subspace& s) {
  std::vector<Vec> images;
  for (const auto& b : s.basis()) images.push_back(linear * b);
  return Subspace::span(images, s.ambient());
}

/// L + p with L(K) == (1 + 2u + u^2)^{-1} K for u = exp(p) - 1; canonical
/// projection of a graded algebra.
AffineMap graded_symmetry_to(const Algebra& a, const Projection& canonical, const Vec& p) {
  const Vec u = exp_m(a, in_m(p)).coords;
  const Vec z = Scalar(2) * u + a.mul_m(u, u);
  if (!is_zero(canonical.functional(z))) throw TheoremContradiction("2u + u^2 is not in K", describe(p));
  const Vec y = x_to_y(a, canonical, z);
  return AffineMap{graded_transport(a, y).matrix, p};
}

}  // namespace

Matrix derivation_Dx(const Algebra& a, const GradedDecomposition& grading, const Vec& x) {
  const std::size_t n = a.dim();
  if (x.size() != n) throw MalformedInput("element has wrong dimension");
  if (!is_zero(x[grading.socle_index])) throw MalformedInput("D_x needs x in A_1 + ... + A_{d-1}");
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const int j = degree_of(grading, i);
    if (j >= grading.top_degree) continue;
    d.set_column(i, Scalar(j) * a.mul_m(x, unit_vec(n, i)));
  }
  if (!is_derivation(a, d)) throw TheoremContradiction("D_x violates the Leibniz rule", describe(x));
  return d;
}

GradedAutomorphism phi_homogeneous(const Algebra& a, const GradedDecomposition& grading, int degree,
                                   const Vec& x) {
  const std::size_t n = a.dim();
  if (degree < 1 || degree >= grading.top_degree) throw MalformedInput("degree must lie in [1, d-1]");
  if (x.size() != n || !supported_on(x, grading.indices[static_cast<std::size_t>(degree)])) {
    throw MalformedInput("x_i is not homogeneous of degree " + std::to_string(degree));
  }
  Matrix phi(n, n);
  const Element base = unital(Scalar(-degree) * x);
  for (std::size_t c = 0; c < n; ++c) {
    const int j = degree_of(grading, c);
    if (j >= grading.top_degree) {
      phi.set_column(c, unit_vec(n, c));
      continue;
    }
    const Element factor = binomial_power(a, base, frac(-j, degree));
    phi.set_column(c, a.multiply(factor, in_m(unit_vec(n, c))).coords);
  }
  if (phi != nilpotent_exp(derivation_Dx(a, grading, x))) {
    throw TheoremContradiction("phi_{x_i} differs from exp(D_{x_i})", describe(x));
  }
  if (!is_multiplicative(a, phi)) throw TheoremContradiction("phi_{x_i} is not multiplicative", describe(x));
  return GradedAutomorphism{phi, {{degree, x}}};
}

GradedAutomorphism graded_transport(const Algebra& a, const Vec& y) {
  const GradedDecomposition grading = graded_components(a);
  const Projection pi = canonical_projection(a);
  const std::size_t n = a.dim();
  const int d = grading.top_degree;
  if (y.size() != n || !is_zero(pi.functional(y))) throw MalformedInput("y must lie in Pi = A_1 + ... + A_{d-1}");

  const Element w = unital_inverse(a, unital(y));
  auto residual = [&](const Matrix& psi, std::size_t u) { return pi.functional(a.multiply(w, in_m(psi.column(u))).coords); };
  auto indices_of = [&](int j) -> const std::vector<std::size_t>& { return grading.indices[static_cast<std::size_t>(j)]; };

  GradedAutomorphism result{Matrix::identity(n), {}};
  for (int k = 1; k <= d - 1; ++k) {
    const auto& targets = indices_of(d - k);
    const auto& unknowns = indices_of(k);
    Vec xk = zero_vec(n);
    if (!targets.empty()) {
      Matrix system(targets.size(), unknowns.size());
      Vec rhs(targets.size());
      for (std::size_t r = 0; r < targets.size(); ++r) {
        for (std::size_t c = 0; c < unknowns.size(); ++c) {
          system(r, c) = Scalar(d - k) * pi.functional(a.product(unknowns[c], targets[r]));
        }
        rhs[r] = -residual(result.matrix, targets[r]);
      }
      const auto sol = solve_linear(system, rhs);
      if (!sol) throw TheoremContradiction("stage " + std::to_string(k) + " system is inconsistent", describe(y));
      for (std::size_t c = 0; c < unknowns.size(); ++c) xk[unknowns[c]] = sol->x[c];
    }
    const GradedAutomorphism step = phi_homogeneous(a, grading, k, xk);
    result.matrix = step.matrix * result.matrix;
    result.factors.emplace_back(k, xk);
    for (int kk = 1; kk <= k; ++kk) {
      for (auto u : indices_of(d - kk)) {
        if (!is_zero(residual(result.matrix, u))) {
          throw TheoremContradiction("stage " + std::to_string(k) + " reintroduced a residual on A_" +
                                         std::to_string(d - kk),
                                     describe(y));
        }
      }
    }
  }
  const Subspace pi_space = pi.kernel();
  if (!(image(result.matrix, pi_space) == multiply_subspace(a, unital(y), pi_space))) {
    throw TheoremContradiction("phi(Pi) differs from (1+y) Pi", describe(y));
  }
  return result;
}

PropertyPReport property_p_certify(const Algebra& a, std::size_t samples, std::uint64_t seed) {
  const Projection pi = canonical_projection(a);
  graded_components(a);
  PropertyPReport report;
  report.seed = seed;
  report.samples = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    auto rng = sample_rng(seed, s);
    const Vec coeffs = random_hyperplane_coeffs(rng, pi);
    const Subspace target = hyperplane_from_graph(pi, coeffs);
    const Vec x = find_x(a, pi, target);
    const Vec y = x_to_y(a, pi, x);
    GradedAutomorphism phi = graded_transport(a, y);
    if (!(image(phi.matrix, pi.kernel()) == target)) {
      throw TheoremContradiction("Property (P) certificate failed", "target graph " + describe(coeffs));
    }
    report.targets.push_back(coeffs);
    report.certificates.push_back(std::move(phi));
    ++report.certified;
  }
  return report;
}

SymmetryCheck verify_symmetry(const Algebra& a, const GraphPoly& gp, const AffineMap& f) {
  SymmetryCheck check;
  check.linear_part_automorphism = inverse(f.linear).has_value() && is_multiplicative(a, f.linear);
  if (!inverse(f.linear)) return check;
  check.forward = surface_image_residual(gp, f, gp).is_zero();
  check.backward = surface_image_residual(gp, f.inverse(), gp).is_zero();
  return check;
}

std::optional<Matrix> search_transporter(const Algebra& a, const Projection& pi, const Subspace& target,
                                         int bound) {
  const Subspace k = pi.kernel();
  std::vector<Matrix> nilpotent;
  for (const auto& d : derivation_algebra(a).basis) {
    try {
      nilpotent_exp(d);
      nilpotent.push_back(d);
    } catch (const PropertyFailure&) {
    }
  }
  std::vector<Matrix> singles{Matrix::identity(a.dim())};
  for (const auto& d : nilpotent) {
    for (int t = -bound; t <= bound; ++t) {
      if (t != 0) singles.push_back(nilpotent_exp(Scalar(t) * d));
    }
  }
  for (const auto& s : singles) {
    if (image(s, k) == target) return s;
  }
  for (std::size_t i = 1; i < singles.size(); ++i) {
    for (std::size_t j = 1; j < singles.size(); ++j) {
      const Matrix m = singles[i] * singles[j];
      if (image(m, k) == target) return m;
    }
  }
  return std::nullopt;
}

std::optional<AffineMap> affine_symmetry_to(const Algebra& a, const Projection& pi, const Vec& p) {
  const std::size_t n = a.dim();
  if (p.size() != n) throw MalformedInput("point has wrong dimension");
  if (!surface_member(a, pi, p)) throw PropertyFailure("point does not lie on S_pi");
  if (pi.n() == 0) return AffineMap::identity(n);

  std::optional<AffineMap> f;
  if (is_graded_gorenstein(a)) {
    const Projection canonical = canonical_projection(a);
    if (pi.kernel() == canonical.kernel()) {
      f = graded_symmetry_to(a, canonical, p);
    } else {
      // S_pi = S_canonical + x; conjugate a canonical symmetry taking -x to p - x
      const Vec x = translate_projection(a, canonical, pi);
      const AffineMap to_origin = graded_symmetry_to(a, canonical, -x);
      const AffineMap to_target = graded_symmetry_to(a, canonical, p - x);
      const AffineMap core = compose(to_target, to_origin.inverse());
      f = compose(AffineMap::translation_by(x), compose(core, AffineMap::translation_by(-x)));
    }
  } else {
    const Vec u = exp_m(a, in_m(p)).coords;
    const Vec z = Scalar(2) * u + a.mul_m(u, u);
    const Subspace target = multiply_subspace(a, unital_inverse(a, unital(z)), pi.kernel());
    if (const auto linear = search_transporter(a, pi, target)) f = AffineMap{*linear, p};
  }
  if (!f) return std::nullopt;

  const GraphPoly gp = compute_graph(a, pi);
  if (f->apply(zero_vec(n)) != p) throw TheoremContradiction("symmetry does not send 0 to p", describe(p));
  const SymmetryCheck check = verify_symmetry(a, gp, *f);
  if (!check.ok()) throw TheoremContradiction("constructed map is not an affine symmetry of S_pi", describe(p));
  return f;
}

std::optional<AffineMap> affine_symmetry_between(const Algebra& a, const Projection& pi, const Vec& p,
                                                 const Vec& q) {
  const auto fp = affine_symmetry_to(a, pi, p);
  const auto fq = affine_symmetry_to(a, pi, q);
  if (!fp || !fq) return std::nullopt;
  const AffineMap f = compose(*fq, fp->inverse());
  if (f.apply(p) != q) throw TheoremContradiction("composed symmetry misses q", describe(p) + " -> " + describe(q));
  return f;
}

Vec PolynomialMap::evaluate(const Vec& u) const {
  Vec out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.evaluate(u));
  return out;
}

AffineMap quadric_linear_map(const Projection& pi, const Matrix& c) {
  const std::size_t n = pi.n();
  if (c.rows() != n || c.cols() != n) throw MalformedInput("kernel map must be n x n");
  const Matrix basis = pi.adapted_basis();
  Matrix block = Matrix::identity(n + 1);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j) block(r, j) = c(r, j);
  const auto inv = inverse(basis);
  if (!inv) throw MalformedInput("kernel basis together with e is not a basis of m");
  return AffineMap{basis * block * *inv, zero_vec(pi.dim())};
}

PolynomialMap induced_polynomial_map(const Algebra& a, const Projection& pi, const AffineMap& g) {
  const std::size_t n = a.dim();
  if (!quadric_residual(a, pi, g).is_zero() || !quadric_residual(a, pi, g.inverse()).is_zero()) {
    throw VerificationFailure("map is not an affine symmetry of Q'_pi");
  }
  std::vector<MultiPoly> w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(MultiPoly::variable(n, i));
  const PolyElement ew = exp_m(a, PolyElement{MultiPoly{}, w});
  const std::vector<MultiPoly> moved = g.apply(ew.coords);
  PolyElement one_plus{MultiPoly::constant(0, Scalar(1)), moved};
  PolynomialMap map{log_m(a, one_plus).coords, 0};
  for (auto& c : map.components) {
    c = MultiPoly(n) + c;
    map.degree = std::max(map.degree, c.total_degree());
  }
  return map;
}

PolynomialMap nonaffine_quadric_symmetry(const Algebra& a, const Projection& pi, const Vec& beta) {
  return induced_polynomial_map(a, pi, quadric_translation(a, pi, beta));
}

TranslationTest translation_negative_test(const Algebra& a, const GraphPoly& gp, const Vec& y) {
  if (is_zero(y)) throw MalformedInput("translation test needs a nonzero point");
  if (!surface_member(a, gp.projection, y)) throw PropertyFailure("point does not lie on S_pi");
  TranslationTest t;
  t.residual = surface_image_residual(gp, AffineMap::translation_by(y), gp);
  t.preserves = t.residual.is_zero();
  return t;
}

}  // namespace gorenstein
