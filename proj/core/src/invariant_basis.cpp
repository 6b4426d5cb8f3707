#include "polyharm/invariant_basis.hpp"

#include <algorithm>
#include <stdexcept>

#include "polyharm/format.hpp"
#include "polyharm/linalg.hpp"

namespace polyharm {

namespace {
Polynomial<Rational> make_e2() {
  Polynomial<Rational> p;
  for (int i = 1; i <= 3; ++i) p += Polynomial<Rational>::x(i) * Polynomial<Rational>::x(i);
  return p;
}
Polynomial<Rational> make_e3() {
  return Polynomial<Rational>::x(1) * Polynomial<Rational>::x(2) * Polynomial<Rational>::x(3);
}
Polynomial<Rational> make_e4() {
  Polynomial<Rational> p;
  const auto x1 = Polynomial<Rational>::x(1), x2 = Polynomial<Rational>::x(2),
             x3 = Polynomial<Rational>::x(3);
  p += (x2 * x2) * (x3 * x3);
  p += (x3 * x3) * (x1 * x1);
  p += (x1 * x1) * (x2 * x2);
  return p;
}
Polynomial<Rational> make_alt_a3() {
  const auto sq = [](const Polynomial<Rational>& p) { return p * p; };
  const auto x1 = Polynomial<Rational>::x(1), x2 = Polynomial<Rational>::x(2),
             x3 = Polynomial<Rational>::x(3);
  return (sq(x1) - sq(x2)) * (sq(x2) - sq(x3)) * (sq(x3) - sq(x1));
}
Polynomial<Rational> make_jumped_generator() {
  const auto sq = [](const Polynomial<Rational>& p) { return p * p; };
  const auto x1 = Polynomial<Rational>::x(1), x2 = Polynomial<Rational>::x(2),
             x3 = Polynomial<Rational>::x(3);
  Polynomial<Rational> quartic;
  quartic += (sq(sq(x1)) + sq(sq(x2)) + sq(sq(x3))).scaled(Rational(5));
  quartic -= (sq(x1) * sq(x2) + sq(x2) * sq(x3) + sq(x3) * sq(x1)).scaled(Rational(13));
  return alternating_b3() * quartic;
}
}  // namespace

const Polynomial<Rational>& inv_e2() {
  static const Polynomial<Rational> p = make_e2();
  return p;
}
const Polynomial<Rational>& inv_e3() {
  static const Polynomial<Rational> p = make_e3();
  return p;
}
const Polynomial<Rational>& inv_e4() {
  static const Polynomial<Rational> p = make_e4();
  return p;
}
const Polynomial<Rational>& inv_e6() {
  static const Polynomial<Rational> p = inv_e3() * inv_e3();
  return p;
}
const Polynomial<Rational>& alternating_a3() {
  static const Polynomial<Rational> p = make_alt_a3();
  return p;
}
const Polynomial<Rational>& alternating_b3() {
  static const Polynomial<Rational> p = inv_e3() * alternating_a3();
  return p;
}
const Polynomial<Rational>& jumped_generator() {
  static const Polynomial<Rational> p = make_jumped_generator();
  return p;
}

const InvariantBasis& invariant_basis(Group g) {
  static const InvariantBasis a3{Group::A3, {inv_e2(), inv_e3(), inv_e4()}, {2, 3, 4}};
  static const InvariantBasis b3{Group::B3, {inv_e2(), inv_e4(), inv_e6()}, {2, 4, 6}};
  return g == Group::A3 ? a3 : b3;
}

std::vector<std::array<int, 3>> generator_exponents(const InvariantBasis& basis, int degree) {
  std::vector<std::array<int, 3>> out;
  const auto& d = basis.degrees;
  for (int a = 0; a * d[0] <= degree; ++a)
    for (int b = 0; a * d[0] + b * d[1] <= degree; ++b) {
      const int rest = degree - a * d[0] - b * d[1];
      if (rest % d[2] != 0) continue;
      out.push_back({a, b, rest / d[2]});
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Polynomial<Rational> invariant_product(const InvariantBasis& basis,
                                       const std::array<int, 3>& key) {
  Polynomial<Rational> p = Polynomial<Rational>::constant(Rational(1));
  for (int i = 0; i < 3; ++i)
    if (key[i] > 0) p *= basis.generators[static_cast<std::size_t>(i)].pow(static_cast<unsigned>(key[i]));
  return p;
}

template <class S>
InvariantDecomposition<S> decompose_impl(const Polynomial<S>& f, const InvariantBasis& basis,
                                         const S& pivot_rel_tol, const S& residual_rel_tol,
                                         mpfr_prec_t prec) {
  InvariantDecomposition<S> dec;
  if (f.is_zero()) {
    dec.degree = -1;
    return dec;
  }
  const auto hdeg = f.homogeneous_degree();
  if (!hdeg) throw std::invalid_argument("decompose: polynomial is not homogeneous");
  dec.degree = *hdeg;

  const auto keys = generator_exponents(basis, dec.degree);
  const auto mons = monomials_of_degree(dec.degree);
  DenseMatrix<S> aug(static_cast<int>(mons.size()), static_cast<int>(keys.size()) + 1);

  for (std::size_t k = 0; k < keys.size(); ++k) {
    Polynomial<Rational> prod = invariant_product(basis, keys[k]);
    for (std::size_t i = 0; i < mons.size(); ++i) {
      const Rational c = prod.coeff(mons[i]);
      if (!c.is_zero()) {
        if constexpr (ScalarTraits<S>::kExact)
          aug.at(static_cast<int>(i), static_cast<int>(k)) = c;
        else
          aug.at(static_cast<int>(i), static_cast<int>(k)) = BigFloat::from_rational(c, prec);
      }
    }
  }
  for (std::size_t i = 0; i < mons.size(); ++i)
    aug.at(static_cast<int>(i), static_cast<int>(keys.size())) = f.coeff(mons[i]);

  S pivot_tol = ScalarTraits<S>::from_long(0);
  if constexpr (!ScalarTraits<S>::kExact) pivot_tol = pivot_rel_tol * aug.max_abs();
  const auto pivots = rref(aug, pivot_tol);

  std::vector<S> sol(keys.size(), ScalarTraits<S>::from_long(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == static_cast<int>(keys.size())) continue;  // inconsistency, caught below
    sol[static_cast<std::size_t>(pivots[r])] = aug.at(static_cast<int>(r), static_cast<int>(keys.size()));
  }
  for (std::size_t k = 0; k < keys.size(); ++k)
    if (!ScalarTraits<S>::is_zero(sol[k])) dec.coefficients[keys[k]] = sol[k];

  // Residual check: reconstruction must reproduce f (exactly, or within the
  // declared tolerance for floats). A nonzero residual means f is not an
  // invariant of this group; report the worst offending monomial.
  Polynomial<S> resid = recompose(dec, basis) - f;
  if constexpr (!ScalarTraits<S>::kExact)
    resid = cleanup(resid, residual_rel_tol * f.max_abs_coeff());
  if (!resid.is_zero()) {
    Monomial worst;
    S worst_abs = ScalarTraits<S>::from_long(-1);
    for (const auto& [m, c] : resid.terms()) {
      S a = c.abs();
      if (worst_abs < a) {
        worst_abs = a;
        worst = m;
      }
    }
    throw std::domain_error("decompose: polynomial is not invariant; residual at monomial " +
                            monomial_str(worst));
  }
  return dec;
}

}  // namespace

InvariantDecomposition<Rational> decompose(const Polynomial<Rational>& f,
                                           const InvariantBasis& basis) {
  return decompose_impl<Rational>(f, basis, Rational(0), Rational(0), 0);
}

InvariantDecomposition<BigFloat> decompose(const Polynomial<BigFloat>& f,
                                           const InvariantBasis& basis,
                                           const BigFloat& pivot_rel_tol,
                                           const BigFloat& residual_rel_tol) {
  mpfr_prec_t prec = BigFloat::kDefaultPrec;
  for (const auto& [m, c] : f.terms()) prec = std::max(prec, c.prec());
  return decompose_impl<BigFloat>(f, basis, pivot_rel_tol, residual_rel_tol, prec);
}

template <class S>
Polynomial<S> recompose(const InvariantDecomposition<S>& dec, const InvariantBasis& basis) {
  Polynomial<S> out;
  for (const auto& [key, c] : dec.coefficients) {
    const Polynomial<Rational> prod = invariant_product(basis, key);
    if constexpr (ScalarTraits<S>::kExact) {
      out += prod.scaled(c);
    } else {
      out += to_bigfloat(prod, c.prec()).scaled(c);
    }
  }
  return out;
}

template Polynomial<Rational> recompose(const InvariantDecomposition<Rational>&,
                                        const InvariantBasis&);
template Polynomial<BigFloat> recompose(const InvariantDecomposition<BigFloat>&,
                                        const InvariantBasis&);

}  // namespace polyharm
