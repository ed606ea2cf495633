#include "gorenstein/series.hpp"

namespace gorenstein {

Element solve_half_square(const Algebra& a, const Element& v) {
  detail::require_unit(v, false, "solve_half_square");
  Element root = binomial_power(a, Element{Scalar(1), v.coords}, frac(1, 2));
  root.unit = 0;
  return root;
}

Element unital_inverse(const Algebra& a, const Element& w) { return binomial_power(a, w, Scalar(-1)); }

}  // namespace gorenstein
