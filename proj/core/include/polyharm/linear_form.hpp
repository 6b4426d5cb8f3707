#ifndef POLYHARM_LINEAR_FORM_HPP
#define POLYHARM_LINEAR_FORM_HPP

#include <array>

#include "polyharm/polynomial.hpp"

namespace polyharm {

template <class S>
using Vec3 = std::array<S, 3>;

template <class S>
Vec3<S> vec_sub(const Vec3<S>& a, const Vec3<S>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
template <class S>
Vec3<S> vec_add(const Vec3<S>& a, const Vec3<S>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
template <class S>
Vec3<S> vec_scale(const Vec3<S>& a, const S& c) {
  return {a[0] * c, a[1] * c, a[2] * c};
}
template <class S>
S dot(const Vec3<S>& a, const Vec3<S>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
template <class S>
Vec3<S> cross(const Vec3<S>& a, const Vec3<S>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
template <class S>
S det3(const Vec3<S>& a, const Vec3<S>& b, const Vec3<S>& c) {
  return dot(a, cross(b, c));
}

inline Vec3<BigFloat> to_bigfloat(const Vec3<Rational>& v, mpfr_prec_t prec) {
  return {BigFloat::from_rational(v[0], prec), BigFloat::from_rational(v[1], prec),
          BigFloat::from_rational(v[2], prec)};
}

// The linear polynomial <p, x> = p1 x1 + p2 x2 + p3 x3.
template <class S>
struct LinearForm {
  Vec3<S> p;

  Polynomial<S> to_polynomial() const {
    Polynomial<S> r;
    for (int i = 0; i < 3; ++i) {
      Monomial m;
      m.e[i] = 1;
      r.add_term(m, p[i]);
    }
    return r;
  }
};

}  // namespace polyharm

#endif
