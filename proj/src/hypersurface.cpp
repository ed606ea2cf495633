#include "gorenstein/hypersurface.hpp"

#include <algorithm>

#include "gorenstein/series.hpp"
#include "gorenstein/transport.hpp"

namespace gorenstein {

namespace {

std::vector<MultiPoly> variables(std::size_t n) {
  std::vector<MultiPoly> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back(MultiPoly::variable(n, i));
  return vars;
}

MultiPoly apply_functional(const Vec& lambda, std::span<const MultiPoly> coords) {
  return linear_combination(lambda, coords);
}

/// sum_i vars_i * k_i as polynomial m-coordinates.
std::vector<MultiPoly> kernel_point(const Projection& pi, std::span<const MultiPoly> vars) {
  std::vector<MultiPoly> coords(pi.dim());
  for (std::size_t r = 0; r < pi.dim(); ++r) {
    Vec row;
    for (const auto& k : pi.kernel_basis) row.push_back(k[r]);
    coords[r] = linear_combination(row, vars);
  }
  return coords;
}

/// Number of distinct orderings of the multiset {i, j, k}.
long orderings(std::size_t i, std::size_t j, std::size_t k) {
  if (i == j && j == k) return 1;
  if (i == j || j == k || i == k) return 3;
  return 6;
}

}  // namespace

GramReport bilinear_form(const Algebra& a, const Projection& pi) {
  const std::size_t n = a.dim();
  std::vector<Element> basis{one(n)};
  for (std::size_t i = 0; i < n; ++i) basis.push_back(in_m(unit_vec(n, i)));
  GramReport report;
  report.gram = Matrix(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      report.gram(i, j) = pi.functional(a.multiply(basis[i], basis[j]).coords);
    }
  }
  report.determinant = determinant(report.gram);
  report.nondegenerate = !is_zero(report.determinant);
  Matrix restricted(pi.n(), pi.n());
  for (std::size_t i = 0; i < pi.n(); ++i) {
    for (std::size_t j = 0; j < pi.n(); ++j) {
      restricted(i, j) = pi.functional(a.mul_m(pi.kernel_basis[i], pi.kernel_basis[j]));
    }
  }
  report.kernel_nondegenerate = pi.n() == 0 || !is_zero(determinant(restricted));
  if (!report.nondegenerate || !report.kernel_nondegenerate) {
    throw TheoremContradiction("b_pi is degenerate on a Gorenstein algebra", a.name());
  }
  return report;
}

bool quadric_member(const Algebra& a, const Projection& pi, const Vec& u) {
  return is_zero(pi.functional(Scalar(2) * u + a.mul_m(u, u)));
}

Scalar quadric_form(const Algebra& a, const Projection& pi, const Vec& alpha, const Vec& beta) {
  return frac(-1, 2) * pi.functional(a.mul_m(alpha, beta));
}

MultiPoly quadric_residual(const Algebra& a, const Projection& pi, const AffineMap& f) {
  const auto vars = variables(pi.n());
  std::vector<MultiPoly> q = kernel_point(pi, vars);
  const MultiPoly height = frac(-1, 2) * apply_functional(pi.lambda, a.mul_m(q, q));
  for (std::size_t r = 0; r < q.size(); ++r) q[r] += pi.e[r] * height;
  const std::vector<MultiPoly> w = f.apply(q);
  std::vector<MultiPoly> sq = a.mul_m(w, w);
  for (std::size_t r = 0; r < sq.size(); ++r) sq[r] += Scalar(2) * w[r];
  return apply_functional(pi.lambda, sq);
}

AffineMap quadric_translation(const Algebra& a, const Projection& pi, const Vec& beta) {
  if (!is_zero(pi.functional(beta))) throw MalformedInput("translation vector must lie in K");
  const std::size_t n = a.dim();
  // v -> v + 2<alpha(v), beta> e = v - lambda(v beta) e
  AffineMap f{Matrix::identity(n), beta + quadric_form(a, pi, beta, beta) * pi.e};
  for (std::size_t j = 0; j < n; ++j) {
    const Scalar c = pi.functional(a.mul_m(unit_vec(n, j), beta));
    for (std::size_t r = 0; r < n; ++r) f.linear(r, j) -= c * pi.e[r];
  }
  const MultiPoly residual = quadric_residual(a, pi, f);
  if (!residual.is_zero()) {
    throw TheoremContradiction("quadric translation leaves Q'_pi", residual.to_string());
  }
  return f;
}

GraphPoly compute_graph(const Algebra& a, const Projection& pi) {
  const std::size_t n = pi.n();
  if (n == 0) throw PropertyFailure("n = 0: m = Ann(m) and S_pi = {0}");
  const auto inv = inverse(pi.adapted_basis());
  if (!inv) throw MalformedInput("kernel basis together with e is not a basis of m");

  const auto vars = variables(n);
  std::vector<MultiPoly> two_alpha = kernel_point(pi, vars);
  for (auto& c : two_alpha) c *= Scalar(2);
  const PolyElement e2 = exp_m(a, PolyElement{MultiPoly{}, two_alpha});

  GraphPoly gp{pi, frac(-1, 2) * apply_functional(pi.lambda, e2.coords), Matrix(n, n), {}, *inv};
  gp.poly = MultiPoly(n) + gp.poly;

  MultiPoly::Exponent ex(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(ex.begin(), ex.end(), 0u);
      ++ex[i];
      ++ex[j];
      gp.g(i, j) = gp.poly.coefficient(ex) / (i == j ? 1 : 2);
    }
  }
  gp.h.assign(n, std::vector<Vec>(n, zero_vec(n)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        std::fill(ex.begin(), ex.end(), 0u);
        ++ex[i];
        ++ex[j];
        ++ex[k];
        gp.h[i][j][k] = gp.poly.coefficient(ex) / orderings(i, j, k);
      }
    }
  }
  return gp;
}

Vec graph_point(const GraphPoly& gp, const Vec& params) {
  if (params.size() != gp.n()) throw MalformedInput("graph point needs one parameter per kernel vector");
  Vec u = gp.poly.evaluate(params) * gp.projection.e;
  for (std::size_t i = 0; i < gp.n(); ++i) u = u + params[i] * gp.projection.kernel_basis[i];
  return u;
}

std::vector<MultiPoly> graph_parametrization(const GraphPoly& gp) {
  const auto vars = variables(gp.n());
  std::vector<MultiPoly> coords = kernel_point(gp.projection, vars);
  for (std::size_t r = 0; r < coords.size(); ++r) coords[r] += gp.projection.e[r] * gp.poly;
  return coords;
}

Vec graph_coords(const GraphPoly& gp, const Vec& u) { return gp.to_graph_coords * u; }

MultiPoly graph_residual(const GraphPoly& gp, std::span<const MultiPoly> point) {
  if (point.size() != gp.dim()) throw MalformedInput("point has wrong dimension");
  std::vector<MultiPoly> alpha;
  for (std::size_t i = 0; i < gp.n(); ++i) alpha.push_back(linear_combination(gp.to_graph_coords.row(i), point));
  const MultiPoly alpha0 = linear_combination(gp.to_graph_coords.row(gp.n()), point);
  return alpha0 - poly_compose_collect(gp.poly, alpha);
}

bool on_surface(const GraphPoly& gp, const Vec& u) {
  const Vec c = graph_coords(gp, u);
  const Vec alpha(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(gp.n()));
  return c.back() == gp.poly.evaluate(alpha);
}

MultiPoly surface_image_residual(const GraphPoly& source, const AffineMap& f, const GraphPoly& target) {
  const auto param = graph_parametrization(source);
  return graph_residual(target, f.apply(param));
}

BlaschkeResult blaschke_check(const GraphPoly& gp) {
  const std::size_t n = gp.n();
  const auto ginv = inverse(gp.g);
  if (!ginv) throw TheoremContradiction("quadratic part of P_pi is degenerate", gp.poly.to_string());
  BlaschkeResult result;
  result.residuals = zero_vec(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) result.residuals[k] += (*ginv)(i, j) * gp.h[i][j][k];
  }
  result.in_normal_form = is_zero(result.residuals);
  return result;
}

bool surface_member(const Algebra& a, const Projection& pi, const Vec& u) {
  return is_zero(pi.functional(exp_m(a, in_m(Scalar(2) * u)).coords));
}

Subspace psi_map(const Algebra& a, const Projection& pi, const Vec& u) {
  if (!surface_member(a, pi, u)) throw PropertyFailure("point does not lie on S_pi");
  return multiply_subspace(a, exp_m(a, in_m(Scalar(-2) * u)), pi.kernel());
}

Vec psi_inverse(const Algebra& a, const Projection& pi, const Subspace& target) {
  const Vec x = find_x(a, pi, target);
  return frac(1, 2) * log_m(a, unital(x)).coords;
}

Vec translate_projection(const Algebra& a, const Projection& pi, const Projection& pi_prime) {
  if (pi.n() == 0) return zero_vec(a.dim());
  const Vec x = -psi_inverse(a, pi, pi_prime.kernel());
  const GraphPoly source = compute_graph(a, pi);
  const GraphPoly target = compute_graph(a, pi_prime);
  const MultiPoly forward = surface_image_residual(source, AffineMap::translation_by(x), target);
  const MultiPoly backward = surface_image_residual(target, AffineMap::translation_by(-x), source);
  if (!forward.is_zero() || !backward.is_zero()) {
    throw TheoremContradiction("S_pi' is not the translate S_pi + x",
                               forward.to_string() + " | " + backward.to_string());
  }
  return x;
}

}  // namespace gorenstein
