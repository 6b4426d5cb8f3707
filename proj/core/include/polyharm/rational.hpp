#ifndef POLYHARM_RATIONAL_HPP
#define POLYHARM_RATIONAL_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace polyharm {

// Arbitrary-precision rational number. Always stored canonicalized
// (reduced, positive denominator); arithmetic is exact, no rounding ever.
class Rational {
public:
  Rational() { mpq_init(q_); }
  Rational(long v) {  // NOLINT: implicit by design, mirrors integer literals
    mpq_init(q_);
    mpq_set_si(q_, v, 1);
  }
  Rational(long num, long den);
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  // Accepts "p", "p/q", decimal strings like "3.62398", and "1.5e-3".
  static Rational parse(const std::string& text);

  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  int sign() const { return mpq_sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
  Rational abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
  }
  Rational pow(unsigned e) const;

  double to_double() const { return mpq_get_d(q_); }
  // "p" for integers, "p/q" otherwise.
  std::string str() const;

  mpq_srcptr raw() const { return q_; }

private:
  mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace polyharm

#endif
