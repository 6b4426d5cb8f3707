#include <doctest.h>

#include "polyharm/diff_ops.hpp"
#include "polyharm/format.hpp"
#include "polyharm/invariant_basis.hpp"
#include "polyharm/polynomial.hpp"
#include "polyharm/symmetric.hpp"
#include "test_util.hpp"

using namespace polyharm;

using P = Polynomial<Rational>;
using LF = LinearForm<Rational>;

namespace {

// Hand-expanded (x1^2-x2^2)(x2^2-x3^2)(x3^2-x1^2); the frozen term list is
// the oracle the product implementation is checked against.
P alt_a3_expected() {
  P p;
  p.add_term(Monomial{{4, 2, 0}}, Rational(-1));
  p.add_term(Monomial{{4, 0, 2}}, Rational(1));
  p.add_term(Monomial{{2, 4, 0}}, Rational(1));
  p.add_term(Monomial{{2, 0, 4}}, Rational(-1));
  p.add_term(Monomial{{0, 4, 2}}, Rational(-1));
  p.add_term(Monomial{{0, 2, 4}}, Rational(1));
  return p;
}

}  // namespace

TEST_CASE("addition: inverses, doubling, mixed-degree merge") {
  P x1 = P::x(1);
  CHECK((x1 + (-x1)).is_zero());
  CHECK((inv_e2() + inv_e2()) == inv_e2().scaled(Rational(2)));

  // alt_a3 plus e3 * (same product) = degree-6 plus degree-9 parts, 12 terms.
  P sum = alternating_a3() + inv_e3() * alternating_a3();
  CHECK(sum.term_count() == 12);
  CHECK(sum == alternating_a3() + alternating_b3());
}

TEST_CASE("multiplication: e3*e3 = e6, identity, brute-force expansion") {
  CHECK(inv_e3() * inv_e3() == inv_e6());
  SplitMix64 rng(7);
  P f = random_poly(rng, 4, 6);
  CHECK(f * P::constant(Rational(1)) == f);

  CHECK(alternating_a3() == alt_a3_expected());
  CHECK(alternating_a3().term_count() == 6);
  CHECK(alternating_a3().coeff(Monomial{{4, 2, 0}}) == Rational(-1));
}

TEST_CASE("partial derivatives") {
  P x1sq = P::x(1) * P::x(1);
  CHECK(x1sq.partial(1) == P::x(1).scaled(Rational(2)));
  CHECK(inv_e2().partial(2) == P::x(2).scaled(Rational(2)));
  CHECK_THROWS_AS(x1sq.partial(0), std::invalid_argument);

  // d alt_b3 / dx1 against central finite differences at random points.
  const mpfr_prec_t prec = 128;
  auto fb = to_bigfloat(alternating_b3(), prec);
  auto dfb = to_bigfloat(alternating_b3().partial(1), prec);
  BigFloat h = BigFloat::from_double(1.0, prec);
  for (int i = 0; i < 25; ++i) h = h / BigFloat(2);  // 2^-25
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 5; ++trial) {
    std::array<BigFloat, 3> x;
    for (auto& c : x)
      c = BigFloat::from_rational(Rational(rng.range(-100, 100), 32), prec);
    auto xp = x, xm = x;
    xp[0] += h;
    xm[0] -= h;
    BigFloat fd = (fb.evaluate(xp) - fb.evaluate(xm)) / (BigFloat(2, prec) * h);
    CHECK(almost_equal(fd, dfb.evaluate(x), BigFloat::from_double(1e-8, prec)));
  }
}

TEST_CASE("partial derivatives commute") {
  SplitMix64 rng(11);
  for (int t = 0; t < 10; ++t) {
    P f = random_poly(rng, 6, 8);
    CHECK(f.partial(1).partial(2) == f.partial(2).partial(1));
    CHECK(f.partial(2).partial(3) == f.partial(3).partial(2));
  }
}

TEST_CASE("apply_operator fixes e2(d)e2 = 6 by the differentiation oracle") {
  // Oracle: apply each monomial of e2 as iterated partial() calls.
  P oracle;
  for (const auto& [m, c] : inv_e2().terms()) {
    P g = inv_e2();
    for (int axis = 0; axis < 3; ++axis)
      for (int k = 0; k < m.e[axis]; ++k) g = g.partial(axis + 1);
    oracle += g.scaled(c);
  }
  CHECK(oracle == P::constant(Rational(6)));
  CHECK(apply_operator(inv_e2(), inv_e2()) == P::constant(Rational(6)));
}

TEST_CASE("apply_operator kills invariants of harmonic generators") {
  CHECK(apply_operator(inv_e2(), alternating_a3()).is_zero());
  CHECK(apply_operator(inv_e3(), alternating_a3()).is_zero());
  CHECK(apply_operator(inv_e4(), alternating_a3()).is_zero());
  CHECK(apply_operator(inv_e4(), jumped_generator()) ==
        alternating_b3().scaled(Rational(-15120)));
}

TEST_CASE("operator composition equals polynomial product") {
  SplitMix64 rng(3);
  for (int t = 0; t < 8; ++t) {
    P f = random_poly(rng, 4, 4);
    P g = random_poly(rng, 4, 4);
    P h = random_poly(rng, 8, 10);
    CHECK(apply_operator(f * g, h) == apply_operator(f, apply_operator(g, h)));
  }
}

TEST_CASE("complete symmetric polynomials") {
  LF a{{Rational(1), Rational(0), Rational(0)}};
  LF b{{Rational(0), Rational(1), Rational(0)}};
  LF c{{Rational(0), Rational(0), Rational(1)}};

  SUBCASE("h_1 is the sum of the forms") {
    LF p{{Rational(2), Rational(-1), Rational(3)}};
    LF q{{Rational(1), Rational(5), Rational(-2)}};
    P expect = LF{{Rational(3), Rational(4), Rational(1)}}.to_polynomial();
    CHECK(complete_symmetric<Rational>(1, {p, q}) == expect);
  }
  SUBCASE("h_2(x1, x2) = x1^2 + x1 x2 + x2^2") {
    P expect;
    expect.add_term(Monomial{{2, 0, 0}}, Rational(1));
    expect.add_term(Monomial{{1, 1, 0}}, Rational(1));
    expect.add_term(Monomial{{0, 2, 0}}, Rational(1));
    CHECK(complete_symmetric<Rational>(2, {a, b}) == expect);
  }
  SUBCASE("h_3 of three independent forms has all C(5,2)=10 monomials") {
    P h3 = complete_symmetric<Rational>(3, {a, b, c});
    CHECK(h3.term_count() == 10);
    CHECK(monomials_of_degree(3).size() == 10);
    for (const auto& m : monomials_of_degree(3)) CHECK(h3.coeff(m) == Rational(1));
  }
  SUBCASE("h_0 = 1 and invalid form counts are rejected") {
    CHECK(complete_symmetric<Rational>(0, {a, b}) == P::constant(Rational(1)));
    std::vector<LF> one{a};
    CHECK_THROWS_AS(complete_symmetric<Rational>(2, std::span<const LF>(one)),
                    std::invalid_argument);
  }
}

TEST_CASE("complete symmetric satisfies the generating recurrence") {
  SplitMix64 rng(17);
  for (int t = 0; t < 4; ++t) {
    LF a{{random_rational(rng), random_rational(rng), random_rational(rng)}};
    LF b{{random_rational(rng), random_rational(rng), random_rational(rng)}};
    LF c{{random_rational(rng), random_rational(rng), random_rational(rng)}};
    std::vector<LF> two{a, b}, three{a, b, c};
    auto all2 = complete_symmetric_all<Rational>(8, std::span<const LF>(two));
    auto all3 = complete_symmetric_all<Rational>(8, std::span<const LF>(three));
    for (int m = 1; m <= 8; ++m) {
      // h_m(a,b) = a h_{m-1}(a,b) + b^m
      CHECK(all2[m] == a.to_polynomial() * all2[m - 1] + b.to_polynomial().pow(m));
      // h_m(a,b,c) = a h_{m-1}(a,b,c) + h_m(b,c)
      std::vector<LF> bc{b, c};
      CHECK(all3[m] == a.to_polynomial() * all3[m - 1] +
                           complete_symmetric<Rational>(m, std::span<const LF>(bc)));
      CHECK(all2[m] == complete_symmetric<Rational>(m, std::span<const LF>(two)));
    }
  }
}

TEST_CASE("evaluation") {
  std::array<Rational, 3> ones{Rational(1), Rational(1), Rational(1)};
  CHECK(inv_e2().evaluate(ones) == Rational(3));
  std::array<Rational, 3> pt{Rational(1), Rational(2), Rational(3)};
  CHECK(alternating_b3().evaluate(pt) == Rational(720));
  CHECK(jumped_generator().evaluate(ones) == Rational(0));
}

TEST_CASE("bigfloat pipeline tracks the exact pipeline on rational input") {
  SplitMix64 rng(23);
  const mpfr_prec_t prec = 100;
  const BigFloat tol = BigFloat::from_double(1e-20, prec);
  for (int t = 0; t < 4; ++t) {
    P f = random_poly(rng, 5, 8);
    P g = random_poly(rng, 5, 8);
    P exact = f * g + f.partial(1);
    auto approx = to_bigfloat(f, prec) * to_bigfloat(g, prec) + to_bigfloat(f, prec).partial(1);
    for (const auto& [m, c] : exact.terms())
      CHECK(almost_equal(approx.coeff(m), BigFloat::from_rational(c, prec), tol));
    CHECK(approx.term_count() == exact.term_count());
  }
}

TEST_CASE("homogeneous degree tracking and canonical text form") {
  CHECK(*inv_e4().homogeneous_degree() == 4);
  P mixed = inv_e2() + inv_e3();
  CHECK(!mixed.homogeneous_degree().has_value());
  CHECK(poly_str(inv_e3().scaled(Rational(-15120))) == "-15120*x1^1*x2^1*x3^1");
  CHECK(poly_str(P::zero()) == "0");
  P c;
  c.add_term(Monomial{}, Rational(1, 2));
  CHECK(poly_str(c) == "1/2");
  // Canonical order: ascending degree, x1-dominant first inside a degree.
  CHECK(poly_str(inv_e2()) == "1*x1^2 + 1*x2^2 + 1*x3^2");
}
