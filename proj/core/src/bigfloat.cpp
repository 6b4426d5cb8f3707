#include "polyharm/bigfloat.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace polyharm {

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  return *this;
}

BigFloat BigFloat::sqrt() const {
  if (sign() < 0) throw std::domain_error("BigFloat::sqrt: negative argument");
  BigFloat r(0, prec());
  mpfr_sqrt(r.x_, x_, MPFR_RNDN);
  return r;
}

std::string BigFloat::str(int significant_digits) const {
  if (is_zero()) return "0";
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(significant_digits), x_, MPFR_RNDN);
  std::string digits(s);
  mpfr_free_str(s);
  std::string sign_part;
  if (digits[0] == '-') {
    sign_part = "-";
    digits.erase(0, 1);
  }
  // mpfr's exponent is relative to a leading radix point: value = 0.digits * 10^e.
  std::string out = sign_part + digits.substr(0, 1);
  if (digits.size() > 1) out += "." + digits.substr(1);
  out += "e" + std::to_string(static_cast<long>(e - 1));
  return out;
}

std::string BigFloat::str() const {
  // ~0.30103 digits per bit, plus slack so distinct values print distinctly.
  const int digits = static_cast<int>(static_cast<double>(prec()) * 0.30103) + 3;
  return str(digits);
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.str(); }

}  // namespace polyharm
