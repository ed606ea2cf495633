#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gorenstein/errors.hpp"
#include "gorenstein/matrix.hpp"
#include "gorenstein/multipoly.hpp"
#include "gorenstein/subspace.hpp"

namespace gorenstein {

/// Element of A = F*1 + m. `coords` are coordinates over the basis of m;
/// elements of m have unit == 0. Coeff is Scalar for concrete elements and
/// MultiPoly for elements with polynomial coordinates.
template <typename Coeff>
struct BasicElement {
  Coeff unit{};
  std::vector<Coeff> coords;

  friend bool operator==(const BasicElement&, const BasicElement&) = default;
};

using Element = BasicElement<Scalar>;
using PolyElement = BasicElement<MultiPoly>;

inline Element in_m(Vec coords) { return Element{Scalar(0), std::move(coords)}; }
inline Element unital(Vec coords) { return Element{Scalar(1), std::move(coords)}; }
inline Element one(std::size_t dim) { return unital(zero_vec(dim)); }

template <typename Coeff>
BasicElement<Coeff> operator+(const BasicElement<Coeff>& a, const BasicElement<Coeff>& b) {
  if (a.coords.size() != b.coords.size()) throw MalformedInput("element dimension mismatch");
  BasicElement<Coeff> r{a.unit + b.unit, a.coords};
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

template <typename Coeff>
BasicElement<Coeff> operator-(const BasicElement<Coeff>& a, const BasicElement<Coeff>& b) {
  if (a.coords.size() != b.coords.size()) throw MalformedInput("element dimension mismatch");
  BasicElement<Coeff> r{a.unit - b.unit, a.coords};
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

template <typename Coeff>
BasicElement<Coeff> operator*(const Scalar& s, const BasicElement<Coeff>& a) {
  BasicElement<Coeff> r{s * a.unit, a.coords};
  for (auto& c : r.coords) c = s * c;
  return r;
}

/// Commutative nilpotent algebra m given by structure constants over a
/// basis e_1..e_N; the unit of A is adjoined formally. The table is stored
/// in full and must be symmetric.
class Algebra {
 public:
  /// table[i][j] = coordinates of e_i * e_j. Throws MalformedInput when the
  /// table is ragged or not symmetric.
  Algebra(std::string name, std::vector<std::string> labels, std::vector<std::vector<Vec>> table,
          std::optional<std::vector<int>> degrees = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::optional<std::vector<int>>& degrees() const noexcept { return degrees_; }
  const Vec& product(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }
  const std::vector<std::vector<Vec>>& table() const noexcept { return table_; }

  /// Product of two elements of m, in any coefficient ring.
  template <typename Coeff>
  std::vector<Coeff> mul_m(const std::vector<Coeff>& u, const std::vector<Coeff>& v) const;

  /// Product in A: (a + u)(b + v) = ab + av + bu + uv.
  template <typename Coeff>
  BasicElement<Coeff> multiply(const BasicElement<Coeff>& u, const BasicElement<Coeff>& v) const;

  /// Matrix of v -> u*v on m.
  Matrix multiplication_matrix(const Vec& u) const;

  /// The same algebra over the basis given by the columns of `basis`
  /// (invertible N x N); labels become b1..bN, degrees are dropped.
  Algebra change_basis(const Matrix& basis) const;

  Algebra with_name(std::string name) const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vec>> table_;
  std::optional<std::vector<int>> degrees_;
};

template <typename Coeff>
std::vector<Coeff> Algebra::mul_m(const std::vector<Coeff>& u, const std::vector<Coeff>& v) const {
  const std::size_t n = dim();
  if (u.size() != n || v.size() != n) throw MalformedInput("element dimension mismatch");
  std::vector<Coeff> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(u[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(v[j])) continue;
      const Vec& c = table_[i][j];
      bool any = false;
      for (const auto& x : c) any = any || !is_zero(x);
      if (!any) continue;
      const Coeff uv = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero(c[k])) out[k] += c[k] * uv;
      }
    }
  }
  return out;
}

template <typename Coeff>
BasicElement<Coeff> Algebra::multiply(const BasicElement<Coeff>& u, const BasicElement<Coeff>& v) const {
  BasicElement<Coeff> r{u.unit * v.unit, mul_m(u.coords, v.coords)};
  for (std::size_t k = 0; k < r.coords.size(); ++k) {
    r.coords[k] += u.unit * v.coords[k];
    r.coords[k] += v.unit * u.coords[k];
  }
  return r;
}

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  /// Basis indices (1-based) of a failing triple or pair, empty on success.
  std::vector<std::size_t> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
};

/// Checks commutativity, associativity, nilpotency and, when degrees are
/// present, homogeneity of every product.
ValidationReport validate(const Algebra& a);

Subspace annihilator(const Algebra& a);
bool is_gorenstein(const Algebra& a);

/// m, m^2, ..., m^(nu+1) = 0 as subspaces; throws PropertyFailure when m is
/// not nilpotent.
std::vector<Subspace> ideal_powers(const Algebra& a);
int nil_index(const Algebra& a);

/// Whether L(e_i e_j) == L(e_i) L(e_j) for all basis pairs.
bool is_multiplicative(const Algebra& a, const Matrix& linear);
/// Same for a map between two algebras of equal dimension.
bool is_multiplicative(const Algebra& from, const Algebra& to, const Matrix& linear);
bool is_derivation(const Algebra& a, const Matrix& d);

struct DerivationAlgebra {
  std::vector<Matrix> basis;
  std::size_t dim() const { return basis.size(); }
};

/// Exact solution space of D(e_i e_j) = D(e_i) e_j + e_i D(e_j).
DerivationAlgebra derivation_algebra(const Algebra& a);

/// Grading A = F + A_1 + ... + A_d read from the basis degrees.
struct GradedDecomposition {
  int top_degree = 0;
  /// components[j] = A_j for j = 0..d (components[0] is the zero subspace
  /// of m, standing for A_0 = F*1).
  std::vector<Subspace> components;
  /// basis indices of each degree
  std::vector<std::vector<std::size_t>> indices;
  /// Index of the basis vector spanning A_d.
  std::size_t socle_index = 0;

  const Subspace& component(int j) const { return components.at(static_cast<std::size_t>(j)); }
};

/// Requires degrees, homogeneous products and Ann(m) == A_d (1-dimensional);
/// throws PropertyFailure otherwise.
GradedDecomposition graded_components(const Algebra& a);
bool is_graded_gorenstein(const Algebra& a);

}  // namespace gorenstein
