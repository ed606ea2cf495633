#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gorenstein/scalar.hpp"

namespace gorenstein {

/// Sparse multivariate polynomial over Q. Terms are kept in graded
/// lexicographic order and zero coefficients are never stored, so structural
/// equality is polynomial equality.
///
/// A polynomial with zero variables is a constant and combines with a
/// polynomial in any number of variables.
class MultiPoly {
 public:
  using Exponent = std::vector<unsigned>;

  struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
  };
  using Terms = std::map<Exponent, Scalar, GrlexLess>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Scalar& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(Exponent exponent, const Scalar& c);

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Value of the constant term.
  Scalar constant_term() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  Scalar coefficient(const Exponent& exponent) const;
  MultiPoly homogeneous_part(unsigned degree) const;

  void add_term(const Exponent& exponent, const Scalar& c);
  Scalar evaluate(const Vec& point) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Scalar& s);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Human-readable form using x1..xn, for diagnostics.
  std::string to_string() const;

 private:
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  std::size_t common_nvars(const MultiPoly& other) const;
  void lift_to(std::size_t nvars);

  std::size_t nvars_ = 0;
  Terms terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const Scalar& s, MultiPoly a);
MultiPoly pow(const MultiPoly& p, unsigned exponent);

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline bool is_one(const MultiPoly& p) { return p.is_constant() && p.constant_term() == 1; }

/// Substitutes subs[i] for variable i of p and collects terms. All
/// substitutions must share one variable count, which becomes the variable
/// count of the result.
MultiPoly poly_compose_collect(const MultiPoly& p, std::span<const MultiPoly> subs);

/// Linear form sum_i coeffs[i] * vars[i].
MultiPoly linear_combination(const Vec& coeffs, std::span<const MultiPoly> vars);

}  // namespace gorenstein
