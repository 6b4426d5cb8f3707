#ifndef POLYHARM_SCALAR_HPP
#define POLYHARM_SCALAR_HPP

#include "polyharm/bigfloat.hpp"
#include "polyharm/rational.hpp"

namespace polyharm {

enum class ScalarKind { ExactRational, BigFloat };

// Uniform access to the two coefficient types. Generic code creates exact
// small integers freely; anything that genuinely rounds (rational-to-float
// conversion, square roots) takes an explicit precision at the call site.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool kExact = true;
  static constexpr ScalarKind kKind = ScalarKind::ExactRational;
  static Rational from_long(long v) { return Rational(v); }
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& v) { return v.is_zero(); }
  // `like` only supplies precision for the float instantiation.
  static Rational ratio_like(long num, long den, const Rational&) {
    return Rational(num, den);
  }
  static Rational long_like(long v, const Rational&) { return Rational(v); }
};

template <>
struct ScalarTraits<BigFloat> {
  static constexpr bool kExact = false;
  static constexpr ScalarKind kKind = ScalarKind::BigFloat;
  // Longs used by the library fit in 64 bits and convert exactly; products
  // with higher-precision values keep the higher precision.
  static BigFloat from_long(long v) { return BigFloat(v); }
  static bool is_zero(const BigFloat& v) { return v.is_zero(); }
  // Non-representable ratios must round at the precision of the value they
  // will combine with, not at the default.
  static BigFloat ratio_like(long num, long den, const BigFloat& like) {
    return BigFloat::from_rational(Rational(num, den), like.prec());
  }
  static BigFloat long_like(long v, const BigFloat& like) { return BigFloat(v, like.prec()); }
};

}  // namespace polyharm

#endif
