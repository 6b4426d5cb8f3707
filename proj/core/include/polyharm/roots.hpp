#ifndef POLYHARM_ROOTS_HPP
#define POLYHARM_ROOTS_HPP

#include <string>
#include <vector>

#include "polyharm/unipoly.hpp"

namespace polyharm {

// Exact interval around one simple real root: either lo == hi (the root is
// rational and hit exactly) or the polynomial changes sign across [lo, hi].
struct RootInterval {
  Rational lo, hi;
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
};

struct RootReport {
  std::string polynomial;             // canonical text of the input
  bool squarefree = false;            // gcd(p, p') is constant
  int positive_count = 0;             // Sturm-certified number of distinct positive roots
  std::vector<RootInterval> intervals;  // one per positive root, ascending
  std::vector<BigFloat> refined;        // Newton-polished values, one per interval
};

// Isolates every positive real root with Sturm counts, bisects the brackets
// down to the requested exact width, then polishes to `prec` bits.
RootReport isolate_positive_roots(const UniPoly& p,
                                  const Rational& width = Rational(1, 1000000000000L),
                                  mpfr_prec_t prec = 192);

// The critical-parameter polynomials of the two families.
const UniPoly& tetra_edge_critical_poly();   // sextic, unique positive root r1
const UniPoly& octa_vertex_critical_poly();  // 8r^4 - 81, positive root 3*2^(-3/4)
const UniPoly& octa_edge_critical_poly();    // octic, unique positive root r1
const UniPoly& octa_face_critical_poly();    // quartic, unique positive root r2 = r3

}  // namespace polyharm

#endif
