#ifndef POLYHARM_EQUIVALENCE_HPP
#define POLYHARM_EQUIVALENCE_HPP

#include <string>
#include <vector>

#include "polyharm/pde.hpp"
#include "polyharm/solid.hpp"

namespace polyharm {

enum class SpaceId { A3Space, B3Space, JumpedSpace, Indeterminate };

const char* space_name(SpaceId id);
int space_dimension(SpaceId id);  // 24, 48, 96; 0 for Indeterminate

// Shared, lazily computed bases of the three solution spaces.
const GradedBasis& space_basis(SpaceId id);

struct CoefficientEvidence {
  int m = 0;
  std::string value;  // exact p/q when available, else scientific
  enum class Verdict { Zero, NonZero, WithinBand } verdict = Verdict::NonZero;
};

struct EquivalenceResult {
  SpaceId space = SpaceId::Indeterminate;
  int dim = 0;
  std::vector<CoefficientEvidence> evidence;
  double zero_band = 0;            // the band used for float zero decisions
  bool tau_annihilation_ok = false;  // tau_m(d) kills the claimed basis, m <= max
  std::string note;
};

// Applies the finite-system reduction: which solution space the infinite
// skeleton system collapses to at this parameter. Zero decisions are exact
// where the assembly is exact (k = 0, 2, 3); the edge problem combines a
// numeric band with an exact radical certificate at rational r. A coefficient
// inside the band without a certificate yields Indeterminate, pushing the
// caller to the certified critical-value machinery.
EquivalenceResult equivalence_check(Family family, int k, const Rational& r,
                                    int max_tau_degree = 8, mpfr_prec_t prec = 128,
                                    double zero_band = 1e-8);

// Float-parameter variant for certified critical values (no exact
// certificates possible; band decisions only).
EquivalenceResult equivalence_check(Family family, int k, const BigFloat& r,
                                    int max_tau_degree = 8, double zero_band = 1e-8);

}  // namespace polyharm

#endif
