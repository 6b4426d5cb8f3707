#ifndef POLYHARM_CLOSED_FORMS_HPP
#define POLYHARM_CLOSED_FORMS_HPP

#include "polyharm/bigfloat.hpp"
#include "polyharm/rational.hpp"
#include "polyharm/solid.hpp"

namespace polyharm {

// Closed forms of the leading decomposition coefficients a_m^(k) for both
// families. These are transcriptions kept strictly separate from the
// geometric assembly; their only role is cross-checking it.
//
// Listed (family, k, m) pairs: tetra k=0,1,2 with m in {2,3,4,6};
// octa k=0,1,2 with m in {2,4,6,8}; k=3 mirrors k=2 (volume = face problem).
bool has_closed_form(Family family, int k, int m);

// Exact value where the closed form is rational in r (k = 0, 2, 3).
// Throws std::invalid_argument for k = 1 or unlisted (k, m).
Rational closed_form_exact(Family family, int k, int m, const Rational& r);

// Any listed case, at the precision of r. The k = 1 forms are
// c0 sqrt(2) + R(r) sqrt(Q(r)) with rational c0, R, Q.
BigFloat closed_form(Family family, int k, int m, const BigFloat& r);

// Exact zero decision at rational r. For k = 1 the radical comparison
// 2 c0^2 = R(r)^2 Q(r) with opposite signs decides it over the rationals.
bool closed_form_is_zero(Family family, int k, int m, const Rational& r);

// The sqrt(2)-conjugate partner R(r) sqrt(Q(r)) - c0 sqrt(2) of a k = 1
// closed form; multiplying the two clears the radicals, which is what the
// critical-parameter factorization identities assert.
BigFloat closed_form_conjugate(Family family, int m, const BigFloat& r);

}  // namespace polyharm

#endif
