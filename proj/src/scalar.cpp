#include "gorenstein/scalar.hpp"

#include <cctype>

#include "gorenstein/errors.hpp"

namespace gorenstein {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

void check_same_size(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw MalformedInput("vector size mismatch: " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
  }
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw MalformedInput("not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw MalformedInput("zero denominator: '" + std::string(text) + "'");
  if (text.front() == '-') n = -n;
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

Vec zero_vec(std::size_t n) { return Vec(n, Scalar(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Scalar(0));
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (!is_zero(x)) return false;
  }
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  check_same_size(a, b);
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  check_same_size(a, b);
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator-(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Scalar dot(const Vec& a, const Vec& b) {
  check_same_size(a, b);
  Scalar acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

std::vector<std::string> to_strings(const Vec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Vec parse_vec(const std::vector<std::string>& items) {
  Vec v;
  v.reserve(items.size());
  for (const auto& s : items) v.push_back(parse_scalar(s));
  return v;
}

}  // namespace gorenstein
