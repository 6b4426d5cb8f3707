#include "polyharm/closed_forms.hpp"

#include <stdexcept>

namespace polyharm {

namespace {

template <class S>
S frac(long num, long den, const S& like) {
  return ScalarTraits<S>::ratio_like(num, den, like);
}

// Horner evaluation of a polynomial given by integer coefficients, constant
// term last.
template <class S>
S ipoly(const S& r, std::initializer_list<long> descending) {
  S acc = ScalarTraits<S>::from_long(0);
  for (long c : descending) acc = acc * r + ScalarTraits<S>::from_long(c);
  return acc;
}

// Rational-in-r closed forms, k = 0 and k = 2 (k = 3 is the k = 2 set).
template <class S>
S plain_form(Family family, int k, int m, const S& r) {
  const bool tetra = family == Family::TriakisTetra;
  if (tetra && k == 0) {
    switch (m) {
      case 2: return frac<S>(4, 9, r) * r * r + ScalarTraits<S>::from_long(4);
      case 3: return frac<S>(8, 9, r) * ipoly(r, {-1, 3}) * ipoly(r, {1, 3, 9});
      case 4: return frac<S>(16, 81, r) * r.pow(4) + ScalarTraits<S>::from_long(16);
      case 6: return frac<S>(64, 243, r) * ipoly(r, {1, 0, 9}) * ipoly(r, {1, 0, -9, 0, 81});
      default: break;
    }
  } else if (tetra && (k == 2 || k == 3)) {
    switch (m) {
      case 2: return frac<S>(8, 3, r) * ipoly(r, {1, 2, 15});
      case 3: return frac<S>(16, 3, r) * ipoly(r, {-1, 3}) * ipoly(r, {1, 5, 12});
      case 4: return frac<S>(32, 27, r) * ipoly(r, {1, 2, -3, 0, 81});
      case 6: return frac<S>(128, 81, r) * ipoly(r, {1, 2, -3, -27, -54, 81, 972});
      default: break;
    }
  } else if (!tetra && k == 0) {
    switch (m) {
      case 2: return frac<S>(8, 9, r) * r * r + ScalarTraits<S>::from_long(2);
      case 4: return frac<S>(32, 81, r) * (r.pow(4) - frac<S>(81, 8, r));
      case 6:
        return frac<S>(2, 243, r) * ipoly(r, {4, 0, 9}) * ipoly(r, {16, 0, -36, 0, 81});
      case 8: return frac<S>(128, 6561, r) * r.pow(8) + ScalarTraits<S>::from_long(4);
      default: break;
    }
  } else if (!tetra && (k == 2 || k == 3)) {
    switch (m) {
      case 2: return frac<S>(8, 3, r) * ipoly(r, {1, 2, 6});
      case 4: return frac<S>(8, 27, r) * ipoly(r, {4, 8, 6, -18, -81});
      case 6: return frac<S>(8, 81, r) * ipoly(r, {16, 32, 24, -18, -54, 0, 243});
      case 8:
        return frac<S>(8, 2187, r) *
               ipoly(r, {16, 32, 24, -72, -324, -648, -486, 1458, 6561});
      default: break;
    }
  }
  throw std::invalid_argument("closed form not listed for this (family, k, m)");
}

// k = 1 forms: value = c0 sqrt(2) + R(r) sqrt(Q(r)).
template <class S>
struct RadicalParts {
  S c0, R, Q;
};

template <class S>
RadicalParts<S> radical_form(Family family, int m, const S& r) {
  if (family == Family::TriakisTetra) {
    const S q = ScalarTraits<S>::from_long(3) * ipoly(r, {1, -2, 9});
    switch (m) {
      case 2:
        return {ScalarTraits<S>::from_long(20), frac<S>(4, 9, r) * ipoly(r, {1, 1, 9}), q};
      case 3:
        return {ScalarTraits<S>::from_long(96),
                frac<S>(8, 9, r) * ipoly(r, {-1, 3}) * ipoly(r, {1, 4, 9}), q};
      case 4:
        return {ScalarTraits<S>::from_long(48),
                frac<S>(16, 81, r) * ipoly(r, {1, 1, -3, 9, 81}), q};
      case 6:
        return {ScalarTraits<S>::from_long(768),
                frac<S>(64, 243, r) * ipoly(r, {1, 1, -3, -18, -27, 81, 729}), q};
      default: break;
    }
  } else {
    const S q = ScalarTraits<S>::from_long(3) * ipoly(r, {1, -2, 3});
    switch (m) {
      case 2:
        return {ScalarTraits<S>::from_long(8), frac<S>(8, 9, r) * ipoly(r, {1, 1, 3}), q};
      case 4:
        return {ScalarTraits<S>::from_long(-12),
                frac<S>(16, 81, r) * ipoly(r, {2, 2, 0, -9, -27}), q};
      case 6:
        return {ScalarTraits<S>::from_long(12),
                frac<S>(8, 243, r) * ipoly(r, {16, 16, 0, -18, 0, 81, 243}), q};
      case 8:
        return {ScalarTraits<S>::from_long(12),
                frac<S>(16, 6561, r) * ipoly(r, {8, 8, 0, -36, -108, -162, 0, 729, 2187}), q};
      default: break;
    }
  }
  throw std::invalid_argument("closed form not listed for this (family, k=1, m)");
}

}  // namespace

bool has_closed_form(Family family, int k, int m) {
  if (k < 0 || k > 3) return false;
  const bool even_only = family == Family::TriakisOcta;
  if (even_only) return m == 2 || m == 4 || m == 6 || m == 8;
  return m == 2 || m == 3 || m == 4 || m == 6;
}

Rational closed_form_exact(Family family, int k, int m, const Rational& r) {
  if (k == 1)
    throw std::invalid_argument("closed_form_exact: k = 1 values are irrational");
  return plain_form<Rational>(family, k, m, r);
}

BigFloat closed_form(Family family, int k, int m, const BigFloat& r) {
  if (k != 1) return plain_form<BigFloat>(family, k, m, r);
  const auto parts = radical_form<BigFloat>(family, m, r);
  const BigFloat sqrt2 = BigFloat(2, r.prec()).sqrt();
  return parts.c0 * sqrt2 + parts.R * parts.Q.sqrt();
}

BigFloat closed_form_conjugate(Family family, int m, const BigFloat& r) {
  const auto parts = radical_form<BigFloat>(family, m, r);
  const BigFloat sqrt2 = BigFloat(2, r.prec()).sqrt();
  return parts.R * parts.Q.sqrt() - parts.c0 * sqrt2;
}

bool closed_form_is_zero(Family family, int k, int m, const Rational& r) {
  if (k != 1) return plain_form<Rational>(family, k, m, r).is_zero();
  const auto parts = radical_form<Rational>(family, m, r);
  // c0 sqrt(2) = -R sqrt(Q) requires opposite signs and equal squares.
  if (parts.c0.sign() * parts.R.sign() >= 0) return false;
  return Rational(2) * parts.c0 * parts.c0 == parts.R * parts.R * parts.Q;
}

}  // namespace polyharm
