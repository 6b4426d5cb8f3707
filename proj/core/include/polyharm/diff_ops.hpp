#ifndef POLYHARM_DIFF_OPS_HPP
#define POLYHARM_DIFF_OPS_HPP

#include "polyharm/polynomial.hpp"

namespace polyharm {

namespace detail {
// Falling factorial p (p-1) ... (p-k+1). Exponents stay below 20 in this
// library, so the product fits a long comfortably.
inline long falling_factorial(int p, int k) {
  long r = 1;
  for (int i = 0; i < k; ++i) r *= p - i;
  return r;
}
}  // namespace detail

// phi(d) applied to f: substitute partial derivatives for the variables of
// phi and act on f. Linear in both arguments.
template <class S>
Polynomial<S> apply_operator(const Polynomial<S>& phi, const Polynomial<S>& f) {
  Polynomial<S> out;
  for (const auto& [op, c_op] : phi.terms()) {
    for (const auto& [m, c_f] : f.terms()) {
      long scale = 1;
      Monomial target;
      bool vanishes = false;
      for (int i = 0; i < 3; ++i) {
        if (m.e[i] < op.e[i]) {
          vanishes = true;
          break;
        }
        scale *= detail::falling_factorial(m.e[i], op.e[i]);
        target.e[i] = m.e[i] - op.e[i];
      }
      if (vanishes) continue;
      out.add_term(target, c_op * c_f * ScalarTraits<S>::from_long(scale));
    }
  }
  return out;
}

}  // namespace polyharm

#endif
