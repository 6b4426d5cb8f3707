#ifndef POLYHARM_POLYNOMIAL_HPP
#define POLYHARM_POLYNOMIAL_HPP

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyharm/monomial.hpp"
#include "polyharm/scalar.hpp"

namespace polyharm {

// Sparse polynomial in x1, x2, x3 over S (Rational or BigFloat).
// Canonical form: no stored zero coefficients. For BigFloat only exact zeros
// drop automatically; discarding small coefficients is an explicit cleanup()
// with a caller-supplied tolerance, never a hidden epsilon.
template <class S>
class Polynomial {
public:
  using Terms = std::map<Monomial, S, MonomialOrder>;

  Polynomial() = default;

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(S c) {
    Polynomial p;
    p.set_coeff(Monomial{}, std::move(c));
    return p;
  }
  static Polynomial term(const Monomial& m, S c) {
    Polynomial p;
    p.set_coeff(m, std::move(c));
    return p;
  }
  // x(1), x(2), x(3)
  static Polynomial x(int axis) {
    Monomial m;
    m.e[axis - 1] = 1;
    return term(m, ScalarTraits<S>::from_long(1));
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  S coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ScalarTraits<S>::from_long(0) : it->second;
  }

  void set_coeff(const Monomial& m, S c) {
    if (ScalarTraits<S>::is_zero(c))
      terms_.erase(m);
    else
      terms_[m] = std::move(c);
  }

  void add_term(const Monomial& m, const S& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!ScalarTraits<S>::is_zero(c)) terms_.emplace(m, c);
      return;
    }
    it->second += c;
    if (ScalarTraits<S>::is_zero(it->second)) terms_.erase(it);
  }

  int degree() const {  // -1 for the zero polynomial
    return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
  }

  // Set iff every stored monomial has the same total degree.
  std::optional<int> homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return std::nullopt;
    return d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m{{ma.e[0] + mb.e[0], ma.e[1] + mb.e[1], ma.e[2] + mb.e[2]}};
        r.add_term(m, ca * cb);
      }
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const S& c) const {
    Polynomial r;
    if (ScalarTraits<S>::is_zero(c)) return r;
    for (const auto& [m, v] : terms_) r.set_coeff(m, v * c);
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(ScalarTraits<S>::from_long(1));
    Polynomial base = *this;
    while (e != 0) {
      if (e & 1u) r *= base;
      if ((e >>= 1u) != 0) base *= base;
    }
    return r;
  }

  S evaluate(const std::array<S, 3>& point) const {
    // Cached per-axis power tables.
    std::array<std::vector<S>, 3> pw;
    const int d = std::max(degree(), 0);
    for (int i = 0; i < 3; ++i) {
      pw[i].reserve(static_cast<std::size_t>(d) + 1);
      pw[i].push_back(ScalarTraits<S>::from_long(1));
      for (int k = 1; k <= d; ++k) pw[i].push_back(pw[i].back() * point[i]);
    }
    S acc = ScalarTraits<S>::from_long(0);
    for (const auto& [m, c] : terms_)
      acc += c * pw[0][m.e[0]] * pw[1][m.e[1]] * pw[2][m.e[2]];
    return acc;
  }

  // Formal partial derivative with respect to x_axis (1-based).
  Polynomial partial(int axis) const {
    if (axis < 1 || axis > 3) throw std::invalid_argument("partial: axis must be 1..3");
    Polynomial r;
    for (const auto& [m, c] : terms_) {
      if (m.e[axis - 1] == 0) continue;
      Monomial n = m;
      --n.e[axis - 1];
      r.add_term(n, c * ScalarTraits<S>::from_long(m.e[axis - 1]));
    }
    return r;
  }

  // Largest absolute coefficient (zero polynomial gives 0).
  S max_abs_coeff() const {
    S best = ScalarTraits<S>::from_long(0);
    for (const auto& [m, c] : terms_) {
      S a = c.abs();
      if (best < a) best = a;
    }
    return best;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
  Terms terms_;
};

// Drops every coefficient with |c| < tol. Only meaningful for BigFloat;
// declared generically so templated pipelines can call it unconditionally.
inline Polynomial<Rational> cleanup(const Polynomial<Rational>& p, const Rational&) {
  return p;
}
inline Polynomial<BigFloat> cleanup(const Polynomial<BigFloat>& p, const BigFloat& tol) {
  Polynomial<BigFloat> r;
  for (const auto& [m, c] : p.terms())
    if (!(c.abs() < tol)) r.set_coeff(m, c);
  return r;
}

inline Polynomial<BigFloat> to_bigfloat(const Polynomial<Rational>& p, mpfr_prec_t prec) {
  Polynomial<BigFloat> r;
  for (const auto& [m, c] : p.terms()) r.set_coeff(m, BigFloat::from_rational(c, prec));
  return r;
}

}  // namespace polyharm

#endif
