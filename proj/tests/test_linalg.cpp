#include <doctest.h>

#include <random>

#include "gorenstein/errors.hpp"
#include "gorenstein/matrix.hpp"
#include "gorenstein/multipoly.hpp"
#include "gorenstein/sampling.hpp"
#include "gorenstein/subspace.hpp"
#include "support.hpp"

using namespace gorenstein;
using gorenstein::testing::q;
using gorenstein::testing::v;

namespace {

Scalar random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 30);
  return frac(num(rng), den(rng));
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_rational(rng);
  return m;
}

}  // namespace

TEST_CASE("scalar parsing and formatting") {
  CHECK(to_string(parse_scalar("6/4")) == "3/2");
  CHECK(to_string(parse_scalar("-10/5")) == "-2");
  CHECK(to_string(parse_scalar("0/7")) == "0");
  CHECK(parse_scalar("-3/9").get_den() == 3);
  CHECK_THROWS_AS(parse_scalar("1/0"), MalformedInput);
  CHECK_THROWS_AS(parse_scalar("0.5"), MalformedInput);
  CHECK_THROWS_AS(parse_scalar(""), MalformedInput);
  CHECK_THROWS_AS(parse_scalar("1/-2"), MalformedInput);
}

TEST_CASE("scalar arithmetic is exact") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Scalar a = random_rational(rng);
    const Scalar b = random_rational(rng);
    CHECK(Scalar(a + b - b) == a);
    if (!is_zero(b)) CHECK(Scalar(a * b / b) == a);
    const Scalar s = a * b;
    CHECK(s.get_den() > 0);
    CHECK(gcd(s.get_num(), s.get_den()) == 1);
  }
}

TEST_CASE("solve_linear on the identity") {
  const auto sol = solve_linear(Matrix::identity(2), q({"1/2", "-3"}));
  REQUIRE(sol);
  CHECK(sol->x == q({"1/2", "-3"}));
  CHECK(sol->kernel.empty());
}

TEST_CASE("solve_linear on a rank-one system") {
  const Matrix a = Matrix::from_rows(std::vector<Vec>{v({1, 1}), v({2, 2})}, 2);
  const auto sol = solve_linear(a, v({1, 2}));
  REQUIRE(sol);
  CHECK(sol->x == v({1, 0}));
  REQUIRE(sol->kernel.size() == 1);
  CHECK(sol->kernel[0] == v({-1, 1}));
  CHECK_FALSE(solve_linear(a, v({1, 3})));
}

TEST_CASE("solve_linear round trip on random 6x6 systems") {
  std::mt19937_64 rng(6);
  int solved = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random_matrix(rng, 6, 6);
    if (is_zero(determinant(a))) continue;
    Vec b(6);
    for (auto& x : b) x = random_rational(rng);
    const auto sol = solve_linear(a, b);
    REQUIRE(sol);
    CHECK(a * sol->x == b);
    CHECK(sol->kernel.empty());
    const auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(*inv * a == Matrix::identity(6));
    ++solved;
  }
  CHECK(solved > 0);
}

TEST_CASE("kernel basis spans the null space of rank-deficient matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix left = random_matrix(rng, 5, 3);
    const Matrix right = random_matrix(rng, 3, 6);
    const Matrix a = left * right;  // rank <= 3
    const auto ker = kernel_basis(a);
    CHECK(ker.size() == 6 - rank(a));
    for (const auto& k : ker) CHECK(is_zero(a * k));
    const auto sol = solve_linear(a, a * right.transpose().column(0));
    REQUIRE(sol);
    CHECK(a * sol->x == a * right.transpose().column(0));
  }
}

TEST_CASE("determinant") {
  const Matrix a = Matrix::from_rows(std::vector<Vec>{v({0, 1}), v({1, 0})}, 2);
  CHECK(determinant(a) == -1);
  CHECK(determinant(Matrix::identity(4)) == 1);
  const Matrix singular = Matrix::from_rows(std::vector<Vec>{v({1, 2}), v({2, 4})}, 2);
  CHECK(is_zero(determinant(singular)));
  CHECK_FALSE(inverse(singular));
}

TEST_CASE("subspace_equal examples") {
  auto cols = [](std::vector<Vec> c) { return Matrix::from_columns(c, c.front().size()); };
  CHECK(subspace_equal(cols({v({1, 0})}), cols({v({2, 0})})));
  CHECK_FALSE(subspace_equal(cols({v({1, 0})}), cols({v({0, 1})})));
  // (1,1,1) = (1,1,0) + (0,0,1) and (2,2,-1) = 2(1,1,0) - (0,0,1)
  CHECK(subspace_equal(cols({v({1, 1, 0}), v({0, 0, 1})}), cols({v({1, 1, 1}), v({2, 2, -1})})));
  CHECK_THROWS_AS(subspace_equal(cols({v({1, 1}), v({2, 2})}), cols({v({1, 0}), v({0, 1})})), MalformedInput);
}

TEST_CASE("subspace_equal is an equivalence relation on sampled subspaces") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix base = random_matrix(rng, 5, 2);
    if (rank(base) < 2) continue;
    // two random changes of basis of the same span, plus an unrelated span
    const Matrix c1 = random_matrix(rng, 2, 2);
    const Matrix c2 = random_matrix(rng, 2, 2);
    if (is_zero(determinant(c1)) || is_zero(determinant(c2))) continue;
    const Matrix u = base, w1 = base * c1, w2 = base * c2;
    CHECK(subspace_equal(u, u));
    CHECK(subspace_equal(u, w1) == subspace_equal(w1, u));
    CHECK((subspace_equal(u, w1) && subspace_equal(w1, w2)));
    CHECK(subspace_equal(u, w2));
    const Matrix other = random_matrix(rng, 5, 2);
    if (rank(other) == 2) {
      const bool uo = subspace_equal(u, other);
      CHECK(uo == subspace_equal(w1, other));
    }
    CHECK(Subspace(u) == Subspace(w1));
  }
}

TEST_CASE("Subspace complement and containment") {
  const Subspace plane(Matrix::from_columns(std::vector<Vec>{v({1, 0, 0}), v({0, 1, 0})}, 3));
  const Subspace line(Matrix::from_columns(std::vector<Vec>{v({1, 1, 1})}, 3));
  const Subspace inside(Matrix::from_columns(std::vector<Vec>{v({1, 1, 0})}, 3));
  CHECK(plane.is_complement_of(line));
  CHECK_FALSE(plane.is_complement_of(inside));
  CHECK(plane.contains(inside));
  CHECK_FALSE(plane.contains(line));
  CHECK(Subspace::span(std::vector<Vec>{v({1, 1, 0}), v({2, 2, 0})}, 3).dim() == 1);
}

TEST_CASE("nilpotent matrix exponential") {
  Matrix n(3, 3);
  n(0, 1) = 1;
  n(1, 2) = 1;
  const Matrix e = nilpotent_exp(n);
  CHECK(e(0, 2) == frac(1, 2));
  CHECK(e(0, 1) == 1);
  CHECK(e(2, 2) == 1);
  CHECK_THROWS_AS(nilpotent_exp(Matrix::identity(2)), PropertyFailure);
}

TEST_CASE("poly_compose_collect examples") {
  const MultiPoly x = MultiPoly::variable(1, 0);
  const MultiPoly one = MultiPoly::constant(1, Scalar(1));
  const std::vector<MultiPoly> shift{x + one};
  CHECK(poly_compose_collect(x * x, shift) == x * x + Scalar(2) * x + one);

  const MultiPoly a = MultiPoly::variable(2, 0);
  const MultiPoly b = MultiPoly::variable(2, 1);
  const std::vector<MultiPoly> scale{Scalar(2) * a, Scalar(3) * b};
  CHECK(poly_compose_collect(a * b, scale) == Scalar(6) * (a * b));

  CHECK_THROWS_AS(poly_compose_collect(a * b, shift), MalformedInput);
}

TEST_CASE("poly_compose_collect agrees with pointwise evaluation") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<unsigned> expo(0, 3);
  for (int trial = 0; trial < 10; ++trial) {
    MultiPoly p(3);
    for (int t = 0; t < 8; ++t) {
      MultiPoly::Exponent ex{expo(rng), expo(rng), expo(rng)};
      while (ex[0] + ex[1] + ex[2] > 3) ex[rng() % 3] = 0;
      p.add_term(ex, Scalar(coeff(rng)));
    }
    const Matrix lin = random_matrix(rng, 3, 3);
    std::vector<MultiPoly> subs;
    for (std::size_t r = 0; r < 3; ++r) {
      MultiPoly s(3);
      for (std::size_t c = 0; c < 3; ++c) s += lin(r, c) * MultiPoly::variable(3, c);
      subs.push_back(s);
    }
    const MultiPoly composed = poly_compose_collect(p, subs);
    CHECK(composed.total_degree() <= 3);
    for (int pt = 0; pt < 10; ++pt) {
      const Vec point = random_vec(rng, 3);
      CHECK(composed.evaluate(point) == p.evaluate(lin * point));
    }
  }
}

TEST_CASE("MultiPoly canonical form") {
  const MultiPoly x = MultiPoly::variable(2, 0);
  const MultiPoly y = MultiPoly::variable(2, 1);
  const MultiPoly p = x * y + y * x - Scalar(2) * (y * x);
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK(pow(x + y, 3).total_degree() == 3);
  CHECK(pow(x + y, 3).coefficient({2, 1}) == 3);
  // constants combine with any variable count
  CHECK(MultiPoly::constant(0, Scalar(2)) + x == x + MultiPoly::constant(2, Scalar(2)));
  CHECK_THROWS_AS(x + MultiPoly::variable(3, 0), MalformedInput);
}
