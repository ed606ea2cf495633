#include "gorenstein/algebra.hpp"

#include <algorithm>

namespace gorenstein {

Algebra::Algebra(std::string name, std::vector<std::string> labels, std::vector<std::vector<Vec>> table,
                 std::optional<std::vector<int>> degrees)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)), degrees_(std::move(degrees)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw MalformedInput("algebra must have dim m >= 1");
  if (table_.size() != n) throw MalformedInput("structure table has wrong number of rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (table_[i].size() != n) throw MalformedInput("structure table has wrong number of columns");
    for (std::size_t j = 0; j < n; ++j) {
      if (table_[i][j].size() != n) throw MalformedInput("product vector has wrong length");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (table_[i][j] != table_[j][i]) throw MalformedInput("structure table is not symmetric");
    }
  }
  if (degrees_ && degrees_->size() != n) throw MalformedInput("degree list has wrong length");
}

Matrix Algebra::multiplication_matrix(const Vec& u) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, mul_m(u, unit_vec(dim(), j)));
  return m;
}

Algebra Algebra::change_basis(const Matrix& basis) const {
  const auto inv = inverse(basis);
  if (!inv) throw MalformedInput("change of basis matrix is singular");
  const std::size_t n = dim();
  std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i][j] = *inv * mul_m(basis.column(i), basis.column(j));
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i + 1));
  return Algebra(name_, std::move(labels), std::move(table));
}

Algebra Algebra::with_name(std::string name) const {
  Algebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

ValidationReport validate(const Algebra& a) {
  const std::size_t n = a.dim();
  ValidationReport report;
  report.checks.push_back({"commutativity", true, {}, "symmetric storage"});

  AxiomCheck assoc{"associativity", true, {}, ""};
  for (std::size_t i = 0; i < n && assoc.passed; ++i) {
    for (std::size_t j = 0; j < n && assoc.passed; ++j) {
      for (std::size_t k = 0; k < n && assoc.passed; ++k) {
        const Vec left = a.mul_m(a.product(i, j), unit_vec(n, k));
        const Vec right = a.mul_m(unit_vec(n, i), a.product(j, k));
        if (left != right) {
          assoc.passed = false;
          assoc.witness = {i + 1, j + 1, k + 1};
          assoc.detail = "(e_i e_j) e_k != e_i (e_j e_k)";
        }
      }
    }
  }
  report.checks.push_back(assoc);

  AxiomCheck nil{"nilpotency", true, {}, ""};
  try {
    nil.detail = "nil-index " + std::to_string(nil_index(a));
  } catch (const PropertyFailure& e) {
    nil.passed = false;
    nil.detail = e.what();
  }
  report.checks.push_back(nil);

  if (const auto& deg = a.degrees()) {
    AxiomCheck graded{"grading", true, {}, ""};
    for (std::size_t i = 0; i < n && graded.passed; ++i) {
      if ((*deg)[i] <= 0) {
        graded.passed = false;
        graded.witness = {i + 1};
        graded.detail = "degrees must be positive";
      }
    }
    for (std::size_t i = 0; i < n && graded.passed; ++i) {
      for (std::size_t j = i; j < n && graded.passed; ++j) {
        const Vec& c = a.product(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          if (!is_zero(c[k]) && (*deg)[k] != (*deg)[i] + (*deg)[j]) {
            graded.passed = false;
            graded.witness = {i + 1, j + 1, k + 1};
            graded.detail = "product e_i e_j has a component of the wrong degree";
            break;
          }
        }
      }
    }
    report.checks.push_back(graded);
  }
  return report;
}

Subspace annihilator(const Algebra& a) {
  const std::size_t n = a.dim();
  // Row block j holds the map u -> u * e_j.
  Matrix stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const Vec& c = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) stacked(j * n + k, i) = c[k];
    }
  }
  return Subspace::span(kernel_basis(stacked), n);
}

bool is_gorenstein(const Algebra& a) { return annihilator(a).dim() == 1; }

std::vector<Subspace> ideal_powers(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Subspace> powers;
  std::vector<Vec> all;
  for (std::size_t i = 0; i < n; ++i) all.push_back(unit_vec(n, i));
  powers.push_back(Subspace::span(all, n));
  while (powers.back().dim() > 0) {
    if (powers.size() > n + 1) throw PropertyFailure("m is not nilpotent");
    std::vector<Vec> products;
    for (const auto& b : powers.back().basis()) {
      for (std::size_t j = 0; j < n; ++j) products.push_back(a.mul_m(b, unit_vec(n, j)));
    }
    Subspace next = Subspace::span(products, n);
    if (next.dim() == powers.back().dim()) throw PropertyFailure("m is not nilpotent");
    powers.push_back(std::move(next));
  }
  return powers;
}

int nil_index(const Algebra& a) { return static_cast<int>(ideal_powers(a).size()) - 1; }

bool is_multiplicative(const Algebra& from, const Algebra& to, const Matrix& linear) {
  const std::size_t n = from.dim();
  if (to.dim() != n || linear.rows() != n || linear.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (linear * from.product(i, j) != to.mul_m(linear.column(i), linear.column(j))) return false;
    }
  }
  return true;
}

bool is_multiplicative(const Algebra& a, const Matrix& linear) { return is_multiplicative(a, a, linear); }

bool is_derivation(const Algebra& a, const Matrix& d) {
  const std::size_t n = a.dim();
  if (d.rows() != n || d.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Vec lhs = d * a.product(i, j);
      const Vec rhs = a.mul_m(d.column(i), unit_vec(n, j)) + a.mul_m(unit_vec(n, i), d.column(j));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

DerivationAlgebra derivation_algebra(const Algebra& a) {
  const std::size_t n = a.dim();
  auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
  std::vector<Vec> equations;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vec eq = zero_vec(n * n);
        const Vec& cij = a.product(i, j);
        for (std::size_t l = 0; l < n; ++l) {
          eq[var(k, l)] += cij[l];
          eq[var(l, i)] -= a.product(l, j)[k];
          eq[var(l, j)] -= a.product(i, l)[k];
        }
        if (!is_zero(eq)) equations.push_back(std::move(eq));
      }
    }
  }
  DerivationAlgebra out;
  std::vector<Vec> solutions;
  if (equations.empty()) {
    for (std::size_t v = 0; v < n * n; ++v) solutions.push_back(unit_vec(n * n, v));
  } else {
    solutions = kernel_basis(Matrix::from_rows(equations, n * n));
  }
  for (const auto& s : solutions) {
    Matrix d(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) d(r, c) = s[var(r, c)];
    out.basis.push_back(std::move(d));
  }
  return out;
}

GradedDecomposition graded_components(const Algebra& a) {
  const auto& deg = a.degrees();
  if (!deg) throw PropertyFailure("algebra carries no grading");
  for (const auto& check : validate(a).checks) {
    if (!check.passed) throw PropertyFailure("grading validation failed: " + check.axiom + " (" + check.detail + ")");
  }
  const std::size_t n = a.dim();
  GradedDecomposition g;
  g.top_degree = *std::max_element(deg->begin(), deg->end());
  g.indices.resize(static_cast<std::size_t>(g.top_degree) + 1);
  for (std::size_t i = 0; i < n; ++i) g.indices[static_cast<std::size_t>((*deg)[i])].push_back(i);
  for (int j = 0; j <= g.top_degree; ++j) {
    std::vector<Vec> vs;
    for (auto i : g.indices[static_cast<std::size_t>(j)]) vs.push_back(unit_vec(n, i));
    g.components.push_back(Subspace::span(vs, n));
  }
  const Subspace ann = annihilator(a);
  if (ann.dim() != 1) throw PropertyFailure("algebra is not Gorenstein: dim Ann(m) = " + std::to_string(ann.dim()));
  if (!(g.components.back() == ann)) throw PropertyFailure("Ann(m) is not the top-degree component A_d");
  g.socle_index = g.indices.back().front();
  return g;
}

bool is_graded_gorenstein(const Algebra& a) {
  try {
    graded_components(a);
    return true;
  } catch (const PropertyFailure&) {
    return false;
  }
}

}  // namespace gorenstein
