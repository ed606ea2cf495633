#include <doctest.h>

#include "gorenstein/hypersurface.hpp"
#include "gorenstein/sampling.hpp"
#include "gorenstein/series.hpp"
#include "gorenstein/transport.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gorenstein;
using namespace gorenstein::testing;

namespace {

MultiPoly poly(std::size_t nvars, std::initializer_list<std::pair<std::vector<unsigned>, Scalar>> terms) {
  MultiPoly p(nvars);
  for (const auto& [ex, c] : terms) p.add_term(ex, c);
  return p;
}

/// Canonical projection plus `count` seeded random ones.
std::vector<Projection> projections(const Algebra& a, std::uint64_t seed, std::size_t count) {
  const Projection base = canonical_projection(a);
  std::vector<Projection> out{base};
  for (std::uint64_t s = 0; s < count; ++s) {
    auto rng = sample_rng(seed, s);
    out.push_back(random_projection(rng, a, base));
  }
  return out;
}

}  // namespace

TEST_CASE("canonical projection") {
  const Projection t4 = canonical_projection(load("t4"));
  CHECK(t4.e == v({0, 0, 1}));
  CHECK(t4.kernel() == Subspace::span(std::vector<Vec>{v({1, 0, 0}), v({0, 1, 0})}, 3));
  CHECK(t4.functional(t4.e) == 1);

  const Projection x2y2 = canonical_projection(load("x2y2"));
  CHECK(x2y2.e == v({0, 0, 1}));
  CHECK(x2y2.n() == 2);

  const Projection t2 = canonical_projection(load("t2"));
  CHECK(t2.e == v({1}));
  CHECK(t2.n() == 0);

  CHECK_THROWS_AS(canonical_projection(load("x2xyy2")), PropertyFailure);

  const Projection skew = canonical_projection(load("t4_skew"));
  CHECK(skew.e == v({0, 0, 1}));
  CHECK(skew.n() == 2);
}

TEST_CASE("bilinear form") {
  const Algebra t2 = load("t2");
  const GramReport r = bilinear_form(t2, canonical_projection(t2));
  CHECK(r.gram == Matrix::from_rows(std::vector<Vec>{v({0, 1}), v({1, 0})}, 2));
  CHECK(r.nondegenerate);

  const Algebra x2y2 = load("x2y2");
  const GramReport s = bilinear_form(x2y2, canonical_projection(x2y2));
  CHECK(s.nondegenerate);
  CHECK(s.kernel_nondegenerate);
  CHECK(s.gram(1, 2) == 1);  // b(x, y)
  CHECK(s.gram(1, 1) == 0);  // b(x, x)
  CHECK(s.gram(0, 0) == 0);  // b(1, 1) = pi(1)
}

TEST_CASE("Gram determinant is nonzero on sampled projections") {
  for (const auto& name : full_suite()) {
    CAPTURE(name);
    const Algebra a = load(name);
    for (const auto& pi : projections(a, 31, 10)) {
      const GramReport r = bilinear_form(a, pi);
      CHECK(r.nondegenerate);
      CHECK(r.determinant != 0);
      CHECK(r.determinant == determinant(r.gram));
      CHECK(r.kernel_nondegenerate);
    }
  }
}

TEST_CASE("quadric membership") {
  const Algebra t3 = load("t3");
  const Projection pi = canonical_projection(t3);
  CHECK(quadric_member(t3, pi, zero_vec(2)));
  CHECK(quadric_member(t3, pi, q({"1", "-1/2"})));
  CHECK_FALSE(quadric_member(t3, pi, v({1, 0})));
  // a t + b t^2 is on Q' iff 2b + a^2 = 0
  for (long a0 = -3; a0 <= 3; ++a0)
    for (long b0 = -5; b0 <= 5; ++b0) CHECK(quadric_member(t3, pi, v({a0, b0})) == (2 * b0 + a0 * a0 == 0));
}

TEST_CASE("quadric translations") {
  const Algebra t3 = load("t3");
  const Projection pi = canonical_projection(t3);
  const AffineMap id = quadric_translation(t3, pi, zero_vec(2));
  CHECK(id == AffineMap::identity(2));
  const AffineMap f = quadric_translation(t3, pi, v({1, 0}));
  const Vec image = f.apply(zero_vec(2));
  CHECK(image == q({"1", "-1/2"}));
  CHECK(quadric_member(t3, pi, image));
  CHECK_THROWS_AS(quadric_translation(t3, pi, v({0, 1})), MalformedInput);
}

TEST_CASE("quadric translations act transitively") {
  for (const auto& name : full_suite()) {
    CAPTURE(name);
    const Algebra a = load(name);
    for (const auto& pi : projections(a, 47, 3)) {
      for (std::uint64_t s = 0; s < 10; ++s) {
        auto rng = sample_rng(53, s);
        // point of Q': alpha in K, alpha_0 = <alpha, alpha>
        Vec alpha = zero_vec(a.dim());
        const Vec c = random_vec(rng, pi.n());
        for (std::size_t i = 0; i < pi.n(); ++i) alpha = alpha + c[i] * pi.kernel_basis[i];
        const Vec u = alpha + quadric_form(a, pi, alpha, alpha) * pi.e;
        REQUIRE(quadric_member(a, pi, u));
        const AffineMap f = quadric_translation(a, pi, alpha);
        CHECK(f.apply(zero_vec(a.dim())) == u);
        CHECK(quadric_residual(a, pi, f).is_zero());
      }
    }
  }
}

TEST_CASE("graph polynomial examples") {
  const Algebra t3 = load("t3");
  CHECK(compute_graph(t3, canonical_projection(t3)).poly == poly(1, {{{2}, Scalar(-1)}}));
  const Algebra x2y2 = load("x2y2");
  CHECK(compute_graph(x2y2, canonical_projection(x2y2)).poly == poly(2, {{{1, 1}, Scalar(-2)}}));
  const Algebra t4 = load("t4");
  const GraphPoly gp = compute_graph(t4, canonical_projection(t4));
  CHECK(gp.poly == poly(2, {{{1, 1}, Scalar(-2)}, {{3, 0}, frac(-2, 3)}}));
  CHECK(gp.g == Matrix::from_rows(std::vector<Vec>{v({0, -1}), v({-1, 0})}, 2));
  CHECK(gp.h[0][0][0] == frac(-2, 3));
  CHECK(gp.h[0][0][1] == 0);
  CHECK(gp.h[1][1][1] == 0);
  CHECK_THROWS_AS(compute_graph(load("t2"), canonical_projection(load("t2"))), PropertyFailure);
}

TEST_CASE("closed-form graph polynomial agrees with the defining equation") {
  for (const auto& name : full_suite()) {
    CAPTURE(name);
    const Algebra a = load(name);
    for (const auto& pi : projections(a, 11, 3)) {
      const GraphPoly gp = compute_graph(a, pi);
      CHECK(gp.poly == oracle_graph_poly(a, pi));
      CHECK(gp.poly.total_degree() <= nil_index(a));
      CHECK(is_zero(gp.poly.constant_term()));
      CHECK(gp.poly.homogeneous_part(1).is_zero());
    }
  }
}

TEST_CASE("quadratic and cubic coefficients are polarized products") {
  for (const auto& name : full_suite()) {
    CAPTURE(name);
    const Algebra a = load(name);
    for (const auto& pi : projections(a, 13, 3)) {
      const GraphPoly gp = compute_graph(a, pi);
      const auto& k = pi.kernel_basis;
      for (std::size_t i = 0; i < pi.n(); ++i)
        for (std::size_t j = 0; j < pi.n(); ++j) {
          CHECK(gp.g(i, j) == -pi.functional(a.mul_m(k[i], k[j])));
          for (std::size_t l = 0; l < pi.n(); ++l)
            CHECK(gp.h[i][j][l] == frac(-2, 3) * pi.functional(a.mul_m(a.mul_m(k[i], k[j]), k[l])));
        }
      CHECK(determinant(gp.g) != 0);
    }
  }
}

TEST_CASE("graph points lie on the quadric after exponentiation") {
  for (const auto& name : full_suite()) {
    CAPTURE(name);
    const Algebra a = load(name);
    const Projection pi = canonical_projection(a);
    const GraphPoly gp = compute_graph(a, pi);
    for (std::uint64_t s = 0; s < 200; ++s) {
      auto rng = sample_rng(17, s);
      const Vec u = graph_point(gp, random_vec(rng, pi.n()));
      const Element w = exp_m(a, in_m(u));
      CHECK(quadric_member(a, pi, w.coords));
      CHECK(surface_member(a, pi, u));
      CHECK(on_surface(gp, u));
    }
  }
}

TEST_CASE("Blaschke normal form") {
  const Algebra x2y2 = load("x2y2");
  const BlaschkeResult r = blaschke_check(compute_graph(x2y2, canonical_projection(x2y2)));
  CHECK(r.in_normal_form);
  CHECK(r.residuals == v({0, 0}));

  const Algebra t4 = load("t4");
  GraphPoly gp = compute_graph(t4, canonical_projection(t4));
  CHECK(blaschke_check(gp).in_normal_form);
  // h_122 += 1, kept symmetric
  gp.h[0][1][1] += 1;
  gp.h[1][0][1] += 1;
  gp.h[1][1][0] += 1;
  const BlaschkeResult bad = blaschke_check(gp);
  CHECK_FALSE(bad.in_normal_form);
  CHECK(bad.residuals == v({0, -2}));
}

TEST_CASE("Blaschke identity on sampled projections") {
  for (const auto& name : full_suite()) {
    CAPTURE(name);
    const Algebra a = load(name);
    for (const auto& pi : projections(a, 23, 10)) {
      const BlaschkeResult r = blaschke_check(compute_graph(a, pi));
      CHECK(r.in_normal_form);
      CHECK(r.residuals == zero_vec(pi.n()));
    }
  }
}

TEST_CASE("translate_projection") {
  const Algebra t3 = load("t3");
  const Projection pi = canonical_projection(t3);
  CHECK(translate_projection(t3, pi, pi) == zero_vec(2));

  const Projection prime = projection_with_kernel(t3, pi.e, std::vector<Vec>{v({1, 1})});
  const Vec x = translate_projection(t3, pi, prime);
  const GraphPoly gp = compute_graph(t3, pi);
  for (long a0 = -4; a0 <= 4; ++a0) {
    const Vec p = graph_point(gp, v({a0}));
    CHECK(surface_member(t3, prime, p + x));
  }

  const Algebra t4 = load("t4");
  const Projection base = canonical_projection(t4);
  const GraphPoly g4 = compute_graph(t4, base);
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto rng = sample_rng(61, s);
    const Projection other = random_projection(rng, t4, base);
    const Vec shift = translate_projection(t4, base, other);
    for (int i = 0; i < 5; ++i) {
      const Vec p = random_surface_point(rng, g4);
      CHECK(surface_member(t4, other, p + shift));
    }
  }
}

TEST_CASE("psi map") {
  for (const auto& name : full_suite()) {
    CAPTURE(name);
    const Algebra a = load(name);
    const Projection pi = canonical_projection(a);
    const GraphPoly gp = compute_graph(a, pi);
    const Subspace ann = annihilator(a);
    CHECK(psi_map(a, pi, zero_vec(a.dim())) == pi.kernel());

    std::vector<std::pair<Vec, Subspace>> seen;
    for (std::uint64_t s = 0; s < 20; ++s) {
      auto rng = sample_rng(71, s);
      const Vec u = random_surface_point(rng, gp);
      const Subspace image = psi_map(a, pi, u);
      CHECK(image.is_complement_of(ann));
      CHECK(psi_inverse(a, pi, image) == u);
      for (const auto& [w, other] : seen) CHECK((w == u) == (other == image));
      seen.emplace_back(u, image);

      const Subspace target = hyperplane_from_graph(pi, random_vec(rng, pi.n()));
      const Vec back = psi_inverse(a, pi, target);
      CHECK(surface_member(a, pi, back));
      CHECK(psi_map(a, pi, back) == target);
    }
    const Vec off = graph_point(gp, zero_vec(pi.n())) + pi.e;
    CHECK_THROWS_AS(psi_map(a, pi, off), PropertyFailure);
  }
}
