#ifndef POLYHARM_FORMAT_HPP
#define POLYHARM_FORMAT_HPP

#include <string>

#include "polyharm/polynomial.hpp"

namespace polyharm {

inline std::string scalar_str(const Rational& v) { return v.str(); }
inline std::string scalar_str(const BigFloat& v) { return v.str(); }

// Canonical text form: terms in canonical monomial order, every coefficient
// printed explicitly, e.g. "-15120*x1^1*x2^1*x3^1". Exact scalars print as
// p/q, floats in scientific notation with full precision.
template <class S>
std::string poly_str(const Polynomial<S>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += scalar_str(c);
    const std::string ms = monomial_str(m);
    if (!ms.empty()) out += "*" + ms;
  }
  return out;
}

std::string poly_str_rational(const Polynomial<Rational>& p);
std::string poly_str_bigfloat(const Polynomial<BigFloat>& p);

}  // namespace polyharm

#endif
