#ifndef POLYHARM_UNIPOLY_HPP
#define POLYHARM_UNIPOLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "polyharm/bigfloat.hpp"
#include "polyharm/rational.hpp"

namespace polyharm {

// Dense univariate polynomial over the rationals; coefficients ascending.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> ascending);
  // Integer coefficients, leading term first: {1, 2, 0, -5} = x^3 + 2x^2 - 5.
  static UniPoly from_integers(std::initializer_list<long> descending);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 when zero
  bool is_zero() const { return c_.empty(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  BigFloat eval(const BigFloat& x) const;
  int sign_at(const Rational& x) const { return eval(x).sign(); }

  UniPoly derivative() const;
  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(const Rational& s) const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  // Euclidean remainder of a by b (b nonzero).
  static UniPoly rem(const UniPoly& a, const UniPoly& b);
  // Monic gcd; constant for coprime inputs.
  static UniPoly gcd(UniPoly a, UniPoly b);

  // Divides by the (positive) largest common rational scale; the sign of
  // every value is preserved, which is what Sturm chains care about.
  UniPoly primitive() const;

  std::string str(const std::string& var = "r") const;

private:
  void trim();
  std::vector<Rational> c_;
};

// Sturm chain p, p', then negated remainders.
std::vector<UniPoly> sturm_chain(const UniPoly& p);
int sign_variations(const std::vector<UniPoly>& chain, const Rational& x);
// Number of distinct real roots in (lo, hi].
int sturm_count(const std::vector<UniPoly>& chain, const Rational& lo, const Rational& hi);
// Every real root lies in (-bound, bound).
Rational root_bound(const UniPoly& p);

}  // namespace polyharm

#endif
