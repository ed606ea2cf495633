#include "gorenstein/multipoly.hpp"

#include <numeric>
#include <sstream>

#include "gorenstein/errors.hpp"

namespace gorenstein {

namespace {

unsigned degree_of(const MultiPoly::Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

}  // namespace

bool MultiPoly::GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = degree_of(a);
  const unsigned db = degree_of(b);
  if (da != db) return da < db;
  return a > b;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Scalar& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw MalformedInput("variable index out of range");
  Exponent e(nvars, 0);
  e[index] = 1;
  MultiPoly p(nvars);
  p.add_term(e, Scalar(1));
  return p;
}

MultiPoly MultiPoly::monomial(Exponent exponent, const Scalar& c) {
  MultiPoly p(exponent.size());
  p.add_term(exponent, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

Scalar MultiPoly::constant_term() const { return coefficient(Exponent(nvars_, 0)); }

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree_of(terms_.rbegin()->first));
}

Scalar MultiPoly::coefficient(const Exponent& exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Scalar(0) : it->second;
}

MultiPoly MultiPoly::homogeneous_part(unsigned degree) const {
  MultiPoly p(nvars_);
  for (const auto& [e, c] : terms_) {
    if (degree_of(e) == degree) p.terms_.emplace(e, c);
  }
  return p;
}

void MultiPoly::add_term(const Exponent& exponent, const Scalar& c) {
  if (exponent.size() != nvars_) throw MalformedInput("exponent arity mismatch");
  if (gorenstein::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (gorenstein::is_zero(it->second)) terms_.erase(it);
  }
}

Scalar MultiPoly::evaluate(const Vec& point) const {
  if (point.size() != nvars_) throw MalformedInput("evaluation point arity mismatch");
  Scalar acc = 0;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    }
    acc += t;
  }
  return acc;
}

std::size_t MultiPoly::common_nvars(const MultiPoly& other) const {
  if (nvars_ == other.nvars_) return nvars_;
  if (nvars_ == 0) return other.nvars_;
  if (other.nvars_ == 0) return nvars_;
  throw MalformedInput("polynomials over different variable counts: " + std::to_string(nvars_) +
                       " vs " + std::to_string(other.nvars_));
}

void MultiPoly::lift_to(std::size_t nvars) {
  if (nvars == nvars_) return;
  const Scalar c = constant_term();
  nvars_ = nvars;
  terms_.clear();
  add_term(Exponent(nvars, 0), c);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  const std::size_t n = common_nvars(other);
  lift_to(n);
  if (other.nvars_ != n) {
    add_term(Exponent(n, 0), other.constant_term());
    return *this;
  }
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  *this += Scalar(-1) * other;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& s) {
  if (gorenstein::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) {
    if (a.nvars_ != 0 && b.nvars_ != 0) return false;
    return a.is_constant() && b.is_constant() && a.constant_term() == b.constant_term();
  }
  return a.terms_ == b.terms_;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << gorenstein::to_string(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
MultiPoly operator-(MultiPoly a) { return a *= Scalar(-1); }
MultiPoly operator*(const Scalar& s, MultiPoly a) { return a *= s; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  const std::size_t n = a.common_nvars(b);
  if (a.nvars_ != n) return a.constant_term() * b;
  if (b.nvars_ != n) return b.constant_term() * a;
  MultiPoly p(n);
  MultiPoly::Exponent e(n);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

MultiPoly pow(const MultiPoly& p, unsigned exponent) {
  MultiPoly result = MultiPoly::constant(p.nvars(), Scalar(1));
  for (unsigned k = 0; k < exponent; ++k) result = result * p;
  return result;
}

MultiPoly poly_compose_collect(const MultiPoly& p, std::span<const MultiPoly> subs) {
  if (subs.size() != p.nvars()) {
    throw MalformedInput("substitution count " + std::to_string(subs.size()) +
                         " does not match variable count " + std::to_string(p.nvars()));
  }
  std::size_t n = 0;
  for (const auto& s : subs) {
    if (s.nvars() == 0) continue;
    if (n != 0 && s.nvars() != n) throw MalformedInput("substitutions over different variable counts");
    n = s.nvars();
  }
  // powers[i][k] = subs[i]^k, built on demand
  std::vector<std::vector<MultiPoly>> powers(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) powers[i].push_back(MultiPoly::constant(n, Scalar(1)));

  MultiPoly result(n);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(n, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * subs[i]);
      if (e[i] > 0) term = term * powers[i][e[i]];
    }
    result += term;
  }
  return result;
}

MultiPoly linear_combination(const Vec& coeffs, std::span<const MultiPoly> vars) {
  if (coeffs.size() != vars.size()) throw MalformedInput("linear combination arity mismatch");
  MultiPoly r;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!is_zero(coeffs[i])) r += coeffs[i] * vars[i];
  }
  return r;
}

}  // namespace gorenstein
