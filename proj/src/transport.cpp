#include "gorenstein/transport.hpp"

#include "gorenstein/series.hpp"

namespace gorenstein {

namespace {

std::string describe(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + "]";
}

void require_in_kernel(const Projection& pi, const Vec& x, const char* what) {
  if (!is_zero(pi.functional(x))) throw MalformedInput(std::string(what) + " must lie in K");
}

}  // namespace

Subspace multiply_subspace(const Algebra& a, const Element& w, const Subspace& s) {
  std::vector<Vec> images;
  for (const auto& b : s.basis()) images.push_back(a.multiply(w, in_m(b)).coords);
  return Subspace::span(images, a.dim());
}

Subspace hyperplane_from_graph(const Projection& pi, const Vec& graph_coeffs) {
  if (graph_coeffs.size() != pi.n()) throw MalformedInput("hyperplane graph needs one coefficient per kernel vector");
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < pi.n(); ++i) basis.push_back(pi.kernel_basis[i] + graph_coeffs[i] * pi.e);
  return Subspace::span(basis, pi.dim());
}

Vec graph_coeffs_of(const Projection& pi, const Subspace& target) {
  const Subspace ann = Subspace::span(std::vector<Vec>{pi.e}, pi.dim());
  if (target.ambient() != pi.dim() || !target.is_complement_of(ann)) {
    throw MalformedInput("hyperplane is not complementary to Ann(m)");
  }
  // target basis columns V, solve V z - c e = k_i
  std::vector<Vec> cols = target.basis();
  cols.push_back(-pi.e);
  const Matrix system = Matrix::from_columns(cols, pi.dim());
  Vec coeffs;
  for (const auto& k : pi.kernel_basis) {
    const auto sol = solve_linear(system, k);
    coeffs.push_back(sol->x.back());
  }
  return coeffs;
}

Matrix pairing_matrix(const Algebra& a, const Projection& pi, const Subspace& target) {
  const auto& targets = target.basis();
  Matrix m(targets.size(), pi.n());
  for (std::size_t r = 0; r < targets.size(); ++r) {
    for (std::size_t i = 0; i < pi.n(); ++i) m(r, i) = pi.functional(a.mul_m(pi.kernel_basis[i], targets[r]));
  }
  return m;
}

Vec find_x(const Algebra& a, const Projection& pi, const Subspace& target) {
  graph_coeffs_of(pi, target);
  // K = {u + mu(u) : u in target} with mu(u) = -lambda(u) e; solve lambda(x u) = -lambda(u).
  const Matrix phi = pairing_matrix(a, pi, target);
  Vec rhs;
  for (const auto& u : target.basis()) rhs.push_back(-pi.functional(u));
  const auto sol = solve_linear(phi, rhs);
  if (!sol || !sol->kernel.empty()) {
    throw TheoremContradiction("pairing K -> L(target, Ann(m)) is not an isomorphism", describe(rhs));
  }
  Vec x = zero_vec(a.dim());
  for (std::size_t i = 0; i < pi.n(); ++i) x = x + sol->x[i] * pi.kernel_basis[i];
  const Element inv = unital_inverse(a, unital(x));
  if (!(multiply_subspace(a, inv, pi.kernel()) == target)) {
    throw TheoremContradiction("(1+x)^{-1} K differs from the target", describe(x));
  }
  return x;
}

Vec x_to_y(const Algebra& a, const Projection& pi, const Vec& x) {
  require_in_kernel(pi, x, "x");
  const Element inv = unital_inverse(a, unital(x));
  const Vec& xp = inv.coords;
  const Vec y = xp - pi.functional(xp) * pi.e;
  const Subspace k = pi.kernel();
  if (!(multiply_subspace(a, unital(y), k) == multiply_subspace(a, inv, k))) {
    throw TheoremContradiction("(1+y) K differs from (1+x)^{-1} K", describe(x));
  }
  return y;
}

}  // namespace gorenstein
