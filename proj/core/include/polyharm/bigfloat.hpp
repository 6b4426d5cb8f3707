#ifndef POLYHARM_BIGFLOAT_HPP
#define POLYHARM_BIGFLOAT_HPP

#include <mpfr.h>

#include <iosfwd>
#include <string>

#include "polyharm/rational.hpp"

namespace polyharm {

// Multi-precision binary float. Every value carries its own precision;
// binary operations round to the larger of the operand precisions.
// Comparisons are exact — closeness tests always take an explicit tolerance.
class BigFloat {
public:
  static constexpr mpfr_prec_t kDefaultPrec = 100;

  BigFloat() { mpfr_init2(x_, kDefaultPrec); mpfr_set_zero(x_, 1); }
  BigFloat(long v, mpfr_prec_t prec = kDefaultPrec) {
    mpfr_init2(x_, prec);
    mpfr_set_si(x_, v, MPFR_RNDN);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_swap(x_, o.x_);
  }
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(x_, o.x_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(x_); }

  static BigFloat from_rational(const Rational& q, mpfr_prec_t prec) {
    BigFloat r(0, prec);
    mpfr_set_q(r.x_, q.raw(), MPFR_RNDN);
    return r;
  }
  static BigFloat from_double(double d, mpfr_prec_t prec) {
    BigFloat r(0, prec);
    mpfr_set_d(r.x_, d, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(x_); }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(0, std::max(a.prec(), b.prec()));
    mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(0, std::max(a.prec(), b.prec()));
    mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(0, std::max(a.prec(), b.prec()));
    mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(0, std::max(a.prec(), b.prec()));
    mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  BigFloat& operator+=(const BigFloat& o) { mpfr_add(x_, x_, o.x_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(x_, x_, o.x_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(x_, x_, o.x_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) { mpfr_div(x_, x_, o.x_, MPFR_RNDN); return *this; }
  BigFloat operator-() const {
    BigFloat r(0, prec());
    mpfr_neg(r.x_, x_, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.x_, b.x_) != 0;
  }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_less_p(a.x_, b.x_) != 0;
  }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) {
    return mpfr_lessequal_p(a.x_, b.x_) != 0;
  }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

  int sign() const { return mpfr_sgn(x_); }
  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  BigFloat abs() const {
    BigFloat r(0, prec());
    mpfr_abs(r.x_, x_, MPFR_RNDN);
    return r;
  }
  BigFloat sqrt() const;
  BigFloat pow(unsigned e) const {
    BigFloat r(0, prec());
    mpfr_pow_ui(r.x_, x_, e, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  // Scientific notation carrying the full precision of the value.
  std::string str() const;
  // Shortened form for human-facing tables.
  std::string str(int significant_digits) const;

  mpfr_srcptr raw() const { return x_; }
  mpfr_ptr raw() { return x_; }

private:
  mpfr_t x_;
};

inline bool almost_equal(const BigFloat& a, const BigFloat& b, const BigFloat& tol) {
  BigFloat scale = a.abs() > b.abs() ? a.abs() : b.abs();
  if (scale < BigFloat(1, scale.prec())) scale = BigFloat(1, scale.prec());
  return (a - b).abs() <= tol * scale;
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

}  // namespace polyharm

#endif
