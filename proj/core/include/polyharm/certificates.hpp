#ifndef POLYHARM_CERTIFICATES_HPP
#define POLYHARM_CERTIFICATES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polyharm/equivalence.hpp"
#include "polyharm/roots.hpp"
#include "polyharm/solid.hpp"

namespace polyharm {

// One named check with its measured numbers; used by certificate reports.
struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct IdentityReport {
  Family family = Family::TriakisTetra;
  int samples = 0;
  BigFloat max_rel_diff;
  std::vector<CheckItem> items;
  bool ok() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

// Verifies the factorization identity linking the edge-problem coefficient
// to the critical polynomial:
//   a(r) * conjugate(r) = scale(r) * chi(r)
// at seeded random rational r in (0, 10), in 128-bit arithmetic, to 1e-25
// relative. Also checks that both sides vanish together at the critical root.
IdentityReport verify_radical_identity(Family family, int n_samples = 20,
                                       mpfr_prec_t prec = 128,
                                       std::uint64_t seed = 0x5eed0001u);

struct SignReport {
  Family family = Family::TriakisTetra;
  std::vector<CheckItem> items;
  // Filled for the octa family: the face-problem m=6 coefficient minimum.
  BigFloat min_value, min_location;
  bool ok() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

// The positivity certificates used by the critical analysis: psi(0) values,
// exact derivative rewrites as sums of nonnegative terms, grid positivity,
// the octa edge-coefficient monotonicity identity, and the golden-section
// minimum of the octa face coefficient a_6.
SignReport sign_certificates(Family family, mpfr_prec_t prec = 128);

struct CriticalPoint {
  int k = 0;
  std::string vanishing;            // name of the vanishing coefficient
  RootInterval bracket;             // exact isolating interval
  BigFloat r;                       // polished root
  BigFloat vanishing_residual;      // |a(r)| at the polished root
  std::string companion;            // companion coefficient that must stay nonzero
  BigFloat companion_value;
  bool companion_algebraic = false;  // true when positivity holds for all r
  SpaceId space = SpaceId::Indeterminate;
  int dim = 0;
};

struct CriticalScan {
  Family family = Family::TriakisTetra;
  int k = 0;
  std::vector<CriticalPoint> points;
  std::vector<std::string> notes;
};

// The certified critical set of one (family, k) cell: root isolation for the
// vanishing coefficient plus the companion nonvanishing cross-checks. Cells
// whose coefficient zero is matched by a simultaneous symmetry-group jump
// (tetra k = 0, 2, 3 at r = 3) come back empty, with a note.
CriticalScan critical_scan(Family family, int k, mpfr_prec_t prec = 192);

}  // namespace polyharm

#endif
