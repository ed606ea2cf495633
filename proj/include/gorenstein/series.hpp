#pragma once

#include <type_traits>

#include "gorenstein/algebra.hpp"

namespace gorenstein {

// Power series evaluated on the nilpotent algebra m. Every series stops as
// soon as the running power of the argument vanishes, which happens at the
// latest at the nil-index; the result is exact, not truncated.

namespace detail {

template <typename Coeff>
bool coords_zero(const std::vector<Coeff>& v) {
  for (const auto& c : v) {
    if (!is_zero(c)) return false;
  }
  return true;
}

/// sum_{k>=1} coefficient(k) * v^k for v in m.
template <typename Coeff, typename CoeffFn>
std::vector<Coeff> nilpotent_series(const Algebra& a, const std::vector<Coeff>& v, CoeffFn coefficient) {
  std::vector<Coeff> sum(a.dim());
  std::vector<Coeff> power = v;
  for (std::size_t k = 1; !coords_zero(power); ++k) {
    if (k > a.dim() + 1) throw PropertyFailure("series argument is not nilpotent");
    const Scalar c = coefficient(k);
    if (!is_zero(c)) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += c * power[i];
    }
    power = a.mul_m(power, v);
  }
  return sum;
}

inline Scalar factorial(std::size_t k) {
  Scalar f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<long>(i);
  return f;
}

template <typename Coeff>
Coeff unit_coeff() {
  if constexpr (std::is_same_v<Coeff, MultiPoly>) {
    return MultiPoly::constant(0, Scalar(1));
  } else {
    return Coeff(1);
  }
}

template <typename Coeff>
void require_unit(const BasicElement<Coeff>& w, bool unital, const char* op) {
  const bool ok = unital ? is_one(w.unit) : is_zero(w.unit);
  if (!ok) {
    throw MalformedInput(std::string(op) + (unital ? ": argument must lie in 1 + m" : ": argument must lie in m"));
  }
}

}  // namespace detail

/// Generalized binomial coefficient q (q-1) ... (q-k+1) / k!.
inline Scalar binomial(const Scalar& q, std::size_t k) {
  Scalar num = 1;
  for (std::size_t i = 0; i < k; ++i) num *= q - static_cast<long>(i);
  return num / detail::factorial(k);
}

/// exp(u) = 1 + sum u^k / k! for u in m.
template <typename Coeff>
BasicElement<Coeff> exp_m(const Algebra& a, const BasicElement<Coeff>& u) {
  detail::require_unit(u, false, "exp_m");
  auto s = detail::nilpotent_series(a, u.coords, [](std::size_t k) -> Scalar { return Scalar(1) / detail::factorial(k); });
  return BasicElement<Coeff>{detail::unit_coeff<Coeff>(), std::move(s)};
}

/// log(1 + v) = sum (-1)^(k+1) v^k / k for 1 + v in 1 + m.
template <typename Coeff>
BasicElement<Coeff> log_m(const Algebra& a, const BasicElement<Coeff>& w) {
  detail::require_unit(w, true, "log_m");
  auto s = detail::nilpotent_series(a, w.coords, [](std::size_t k) -> Scalar {
    return Scalar(k % 2 == 1 ? 1 : -1) / Scalar(static_cast<long>(k));
  });
  return BasicElement<Coeff>{Coeff{}, std::move(s)};
}

/// (1 + v)^q through the binomial series, for any rational q.
template <typename Coeff>
BasicElement<Coeff> binomial_power(const Algebra& a, const BasicElement<Coeff>& w, const Scalar& q) {
  detail::require_unit(w, true, "binomial_power");
  auto s = detail::nilpotent_series(a, w.coords, [&q](std::size_t k) -> Scalar { return binomial(q, k); });
  return BasicElement<Coeff>{detail::unit_coeff<Coeff>(), std::move(s)};
}

/// The element u = (1 + v)^(1/2) - 1 of m, which satisfies 2u + u^2 = v.
Element solve_half_square(const Algebra& a, const Element& v);

/// The unital element (1 + x)^{-1}.
Element unital_inverse(const Algebra& a, const Element& w);

}  // namespace gorenstein
