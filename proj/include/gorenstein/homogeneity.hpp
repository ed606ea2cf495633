#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gorenstein/affine_map.hpp"
#include "gorenstein/hypersurface.hpp"

namespace gorenstein {

/// Automorphism phi_{x_{d-1}} o ... o phi_{x_1} of a graded algebra.
struct GradedAutomorphism {
  Matrix matrix;
  /// (degree i, x_i in A_i), innermost factor first.
  std::vector<std::pair<int, Vec>> factors;
};

/// D_x(u) = x (u_1 + 2 u_2 + ... + (d-1) u_{d-1}) for x in A_1 + ... + A_{d-1};
/// the Leibniz rule is checked on all basis pairs.
Matrix derivation_Dx(const Algebra& a, const GradedDecomposition& grading, const Vec& x);

/// phi_{x_i}(u) = sum_{j<d} (1 - i x_i)^{-j/i} u_j + u_d for x_i homogeneous
/// of degree i. Cross-checked against the matrix exponential of D_{x_i}
/// and for multiplicativity.
GradedAutomorphism phi_homogeneous(const Algebra& a, const GradedDecomposition& grading, int degree,
                                   const Vec& x);

/// phi with phi(Pi) == (1+y) Pi for Pi = A_1 + ... + A_{d-1} and y in Pi.
///
/// Stage k picks x_k in A_k so that the A_d-component of
/// (1+y)^{-1} phi(u) vanishes for u in A_{d-k}: the factor phi_{x_k} adds
/// (d-k) x_k u to that component and leaves the images of A_{d-k} unchanged
/// otherwise, and later factors do not touch them. Each stage is a square
/// linear system through the perfect pairing A_k x A_{d-k} -> A_d.
GradedAutomorphism graded_transport(const Algebra& a, const Vec& y);

struct PropertyPReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t certified = 0;
  /// Graph coefficients of every sampled target hyperplane.
  std::vector<Vec> targets;
  /// The certifying automorphisms, one per target.
  std::vector<GradedAutomorphism> certificates;
};

/// Transports the canonical Pi to `samples` seeded random hyperplanes and
/// re-checks phi(Pi) == target on the subspace level.
PropertyPReport property_p_certify(const Algebra& a, std::size_t samples, std::uint64_t seed);

struct SymmetryCheck {
  bool linear_part_automorphism = false;
  bool forward = false;
  bool backward = false;
  bool ok() const { return linear_part_automorphism && forward && backward; }
};

/// Exact checks that f is an affine self-map of S_pi: linear part in
/// Aut(m), f(S) in S and f^{-1}(S) in S as polynomial identities.
SymmetryCheck verify_symmetry(const Algebra& a, const GraphPoly& gp, const AffineMap& f);

/// Affine f with f(S_pi) == S_pi and f(0) == p, as L + p where L in Aut(m)
/// sends K to (1 + 2u + u^2)^{-1} K, u = exp(p) - 1. Graded algebras always
/// succeed (non-canonical projections are reduced to the canonical one);
/// for ungraded algebras a bounded search over exponentials of nilpotent
/// derivations is run and nullopt means undecided.
std::optional<AffineMap> affine_symmetry_to(const Algebra& a, const Projection& pi, const Vec& p);

/// Affine symmetry of S_pi taking p to q.
std::optional<AffineMap> affine_symmetry_between(const Algebra& a, const Projection& pi, const Vec& p,
                                                 const Vec& q);

/// Bounded search for phi in Aut(m) with phi(K) == target among exp(tD) and
/// exp(sD) exp(tD') for nilpotent derivation basis elements and integers
/// |s|, |t| <= bound.
std::optional<Matrix> search_transporter(const Algebra& a, const Projection& pi, const Subspace& target,
                                         int bound = 3);

/// Polynomial self-map of m, one component per coordinate.
struct PolynomialMap {
  std::vector<MultiPoly> components;
  int degree = 0;
  bool affine() const { return degree <= 1; }
  Vec evaluate(const Vec& u) const;
};

/// Linear map acting on K by c (in the kernel basis) and fixing e.
AffineMap quadric_linear_map(const Projection& pi, const Matrix& c);

/// log o g o exp for g in Aff(Q'_pi); throws VerificationFailure unless g
/// and its inverse preserve Q'_pi.
PolynomialMap induced_polynomial_map(const Algebra& a, const Projection& pi, const AffineMap& g);

/// log o g o exp for g the quadric translation by beta in K.
PolynomialMap nonaffine_quadric_symmetry(const Algebra& a, const Projection& pi, const Vec& beta);

struct TranslationTest {
  bool preserves = false;
  MultiPoly residual;
};

/// Whether u -> u + y preserves S_pi, for y a nonzero point of S_pi.
TranslationTest translation_negative_test(const Algebra& a, const GraphPoly& gp, const Vec& y);

}  // namespace gorenstein
