#include <doctest.h>

#include <stdexcept>

#include "polyharm/bigfloat.hpp"
#include "polyharm/rational.hpp"

using polyharm::BigFloat;
using polyharm::Rational;

TEST_CASE("rational arithmetic is exact and canonical") {
  Rational a(2, 4);
  CHECK(a.str() == "1/2");
  CHECK((a + a).str() == "1");
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(1) - Rational(1)).is_zero());
  CHECK(Rational(-3, 6).str() == "-1/2");
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(7, 3).pow(2) == Rational(49, 9));
  CHECK(Rational(-2).abs() == Rational(2));
  CHECK(Rational(5, 7) / Rational(5, 7) == Rational(1));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("rational parsing accepts p/q, decimals and exponents") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("3.62398") == Rational(362398, 100000));
  CHECK(Rational::parse("1e-3") == Rational(1, 1000));
  CHECK(Rational::parse("2.5e2") == Rational(250));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("bigfloat carries explicit precision and compares exactly") {
  BigFloat a(1, 128);
  BigFloat b(3, 64);
  CHECK((a / b).prec() == 128);
  CHECK(BigFloat(2) == BigFloat(2, 200));
  CHECK(BigFloat(1) < BigFloat(2));

  // No hidden epsilon: 1/3 at different precisions differs, and the
  // difference is visible to exact comparison.
  BigFloat third_lo = BigFloat(1, 64) / BigFloat(3, 64);
  BigFloat third_hi = BigFloat(1, 256) / BigFloat(3, 256);
  CHECK(third_lo != third_hi);
  CHECK(polyharm::almost_equal(third_lo, third_hi, BigFloat::from_double(1e-15, 64)));
  CHECK(!polyharm::almost_equal(third_lo, third_hi, BigFloat::from_double(1e-30, 64)));
}

TEST_CASE("bigfloat square root and rational conversion") {
  BigFloat two(2, 128);
  BigFloat r = two.sqrt();
  CHECK(polyharm::almost_equal(r * r, two, BigFloat::from_double(1e-35, 128)));
  CHECK_THROWS_AS(BigFloat(-1).sqrt(), std::domain_error);

  Rational q(362398, 100000);
  BigFloat f = BigFloat::from_rational(q, 100);
  CHECK(f.to_double() == doctest::Approx(3.62398).epsilon(1e-12));
}

TEST_CASE("bigfloat printing is scientific with full precision") {
  BigFloat x = BigFloat::from_rational(Rational(-15120), 100);
  CHECK(x.str(6) == "-1.51200e4");
  CHECK(BigFloat(0).str() == "0");
  BigFloat tiny = BigFloat::from_double(0.001953125, 64);  // 2^-9
  CHECK(tiny.str(4) == "1.953e-3");
}
