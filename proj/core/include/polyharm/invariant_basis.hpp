#ifndef POLYHARM_INVARIANT_BASIS_HPP
#define POLYHARM_INVARIANT_BASIS_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "polyharm/group.hpp"
#include "polyharm/polynomial.hpp"

namespace polyharm {

// Basic invariants of the reflection groups acting on R^3:
//   e2 = x1^2 + x2^2 + x3^2
//   e3 = x1 x2 x3
//   e4 = x2^2 x3^2 + x3^2 x1^2 + x1^2 x2^2
//   e6 = e3^2
// W(A3) is generated by {e2, e3, e4}; W(B3) by {e2, e4, e6}.
const Polynomial<Rational>& inv_e2();
const Polynomial<Rational>& inv_e3();
const Polynomial<Rational>& inv_e4();
const Polynomial<Rational>& inv_e6();

// Lowest-degree alternating polynomials generating the harmonic spaces as
// differentiation modules: degree 6 for A3, degree 9 for B3.
const Polynomial<Rational>& alternating_a3();
const Polynomial<Rational>& alternating_b3();

// Degree-13 generator of the jumped solution space:
// alternating_b3 * (5(x1^4+x2^4+x3^4) - 13(x1^2 x2^2 + x2^2 x3^2 + x3^2 x1^2)).
const Polynomial<Rational>& jumped_generator();

struct InvariantBasis {
  Group group;
  std::vector<Polynomial<Rational>> generators;  // A3: e2,e3,e4; B3: e2,e4,e6
  std::vector<int> degrees;
};

const InvariantBasis& invariant_basis(Group g);

// Exponent triples (a,b,c) with a*d1 + b*d2 + c*d3 = degree, in the canonical
// report order: ascending power of e2, then lexicographic.
std::vector<std::array<int, 3>> generator_exponents(const InvariantBasis& basis, int degree);

// Coefficients of a group-invariant homogeneous polynomial over the products
// of basic invariants; the representation is unique.
template <class S>
struct InvariantDecomposition {
  int degree = 0;
  // exponent triple (a,b,c) of the generators -> coefficient
  std::map<std::array<int, 3>, S> coefficients;

  // Coefficient of the product with the given exponents (0 if absent).
  S coefficient(const std::array<int, 3>& key) const {
    auto it = coefficients.find(key);
    return it == coefficients.end() ? ScalarTraits<S>::from_long(0) : it->second;
  }
};

// Solves the linear system expressing f over the invariant products of its
// degree. Exact scalars demand an exactly zero residual; floats use the
// explicit tolerances (pivot_tol relative to the matrix norm, residual_tol
// relative to the largest coefficient of f). Throws std::domain_error naming
// the violating monomial if f is not in the span (i.e. not invariant).
InvariantDecomposition<Rational> decompose(const Polynomial<Rational>& f,
                                           const InvariantBasis& basis);
InvariantDecomposition<BigFloat> decompose(const Polynomial<BigFloat>& f,
                                           const InvariantBasis& basis,
                                           const BigFloat& pivot_rel_tol,
                                           const BigFloat& residual_rel_tol);

template <class S>
Polynomial<S> recompose(const InvariantDecomposition<S>& dec, const InvariantBasis& basis);

}  // namespace polyharm

#endif
