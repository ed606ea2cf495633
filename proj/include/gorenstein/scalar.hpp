#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gorenstein {

/// Exact rational number. gmpxx keeps every result in lowest terms with a
/// positive denominator.
using Scalar = mpq_class;

/// Coordinate vector over Q.
using Vec = std::vector<Scalar>;

/// Parses "p/q" or "p" (optional leading '-'); throws MalformedInput.
Scalar parse_scalar(std::string_view text);

/// "p/q", or "p" when q == 1.
std::string to_string(const Scalar& s);

/// p/q as a canonical Scalar.
inline Scalar frac(long p, long q) {
  Scalar s(p);
  s /= q;
  return s;
}

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }
inline bool is_one(const Scalar& s) { return s == 1; }

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Scalar& s, const Vec& v);
Scalar dot(const Vec& a, const Vec& b);

std::vector<std::string> to_strings(const Vec& v);
Vec parse_vec(const std::vector<std::string>& items);

}  // namespace gorenstein
