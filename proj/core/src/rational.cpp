#include "polyharm/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace polyharm {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  mpq_init(q_);
  mpq_set_si(q_, num, 1);
  Rational d;
  mpq_set_si(d.q_, den, 1);
  mpq_div(q_, q_, d.q_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  mpq_div(q_, q_, o.q_);
  return *this;
}

Rational Rational::pow(unsigned e) const {
  Rational r(1);
  Rational base(*this);
  while (e != 0) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational::parse: empty string");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    Rational num, den;
    if (mpq_set_str(num.q_, text.substr(0, slash).c_str(), 10) != 0 ||
        mpq_set_str(den.q_, text.substr(slash + 1).c_str(), 10) != 0)
      throw std::invalid_argument("Rational::parse: bad fraction '" + text + "'");
    mpq_canonicalize(num.q_);
    mpq_canonicalize(den.q_);
    return num / den;
  }

  // Split off an exponent part, then a decimal point.
  std::string body = text;
  long exp10 = 0;
  const auto epos = text.find_first_of("eE");
  if (epos != std::string::npos) {
    body = text.substr(0, epos);
    exp10 = std::stol(text.substr(epos + 1));
  }
  std::string digits;
  digits.reserve(body.size());
  bool seen_point = false;
  for (char c : body) {
    if (c == '.') {
      if (seen_point) throw std::invalid_argument("Rational::parse: '" + text + "'");
      seen_point = true;
      continue;
    }
    if (seen_point && std::isdigit(static_cast<unsigned char>(c))) --exp10;
    digits.push_back(c);
  }
  Rational r;
  if (digits.empty() || mpq_set_str(r.q_, digits.c_str(), 10) != 0)
    throw std::invalid_argument("Rational::parse: '" + text + "'");
  mpq_canonicalize(r.q_);
  Rational ten(10);
  if (exp10 > 0)
    r *= ten.pow(static_cast<unsigned>(exp10));
  else if (exp10 < 0)
    r /= ten.pow(static_cast<unsigned>(-exp10));
  return r;
}

std::string Rational::str() const {
  char* s = mpq_get_str(nullptr, 10, q_);
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace polyharm
