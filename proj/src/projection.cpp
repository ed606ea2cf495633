#include "gorenstein/projection.hpp"

namespace gorenstein {

namespace {

void require_gorenstein(const Subspace& ann) {
  if (ann.dim() != 1) {
    throw PropertyFailure("algebra is not Gorenstein: dim Ann(m) = " + std::to_string(ann.dim()));
  }
}

}  // namespace

Matrix Projection::adapted_basis() const {
  std::vector<Vec> cols = kernel_basis;
  cols.push_back(e);
  return Matrix::from_columns(cols, dim());
}

Projection make_projection(const Algebra& a, const Vec& e, const Vec& lambda) {
  const Subspace ann = annihilator(a);
  require_gorenstein(ann);
  if (e.size() != a.dim() || lambda.size() != a.dim()) throw MalformedInput("projection has wrong dimension");
  if (is_zero(e) || !ann.contains(e)) throw MalformedInput("e does not generate Ann(m)");
  if (dot(lambda, e) != 1) throw MalformedInput("projection functional must satisfy lambda(e) = 1");
  Projection p{e, lambda, kernel_basis(Matrix::from_rows(std::vector<Vec>{lambda}, a.dim()))};
  return p;
}

Projection projection_with_kernel(const Algebra& a, const Vec& e, std::span<const Vec> kernel) {
  const Subspace ann = annihilator(a);
  require_gorenstein(ann);
  if (is_zero(e) || !ann.contains(e)) throw MalformedInput("e does not generate Ann(m)");
  if (kernel.size() + 1 != a.dim()) throw MalformedInput("kernel must be a hyperplane of m");
  std::vector<Vec> rows(kernel.begin(), kernel.end());
  rows.push_back(e);
  // lambda vanishes on the kernel and is 1 on e
  const Matrix system = Matrix::from_rows(rows, a.dim());
  const auto sol = solve_linear(system, unit_vec(a.dim(), a.dim() - 1));
  if (!sol || !sol->kernel.empty()) throw MalformedInput("kernel is not complementary to Ann(m)");
  return Projection{e, sol->x, std::vector<Vec>(kernel.begin(), kernel.end())};
}

Projection canonical_projection(const Algebra& a) {
  const std::size_t n = a.dim();
  if (a.degrees() && is_graded_gorenstein(a)) {
    const GradedDecomposition g = graded_components(a);
    std::vector<Vec> kernel;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != g.socle_index) kernel.push_back(unit_vec(n, i));
    }
    return Projection{unit_vec(n, g.socle_index), unit_vec(n, g.socle_index), kernel};
  }
  const Subspace ann = annihilator(a);
  require_gorenstein(ann);
  const Vec& e = ann.basis().front();
  std::size_t pivot = 0;
  while (is_zero(e[pivot])) ++pivot;
  std::vector<Vec> kernel;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != pivot) kernel.push_back(unit_vec(n, i));
  }
  return Projection{e, unit_vec(n, pivot), kernel};
}

Projection projection_from_graph(const Algebra& a, const Projection& base, const Vec& graph_coeffs,
                                 const Scalar& scale) {
  if (graph_coeffs.size() != base.n()) throw MalformedInput("hyperplane graph needs one coefficient per kernel vector");
  if (is_zero(scale)) throw MalformedInput("generator scale must be nonzero");
  std::vector<Vec> kernel;
  for (std::size_t i = 0; i < base.n(); ++i) kernel.push_back(base.kernel_basis[i] + graph_coeffs[i] * base.e);
  return projection_with_kernel(a, scale * base.e, kernel);
}

}  // namespace gorenstein
