#include "polyharm/equivalence.hpp"

#include <mutex>
#include <optional>

#include "polyharm/closed_forms.hpp"
#include "polyharm/diff_ops.hpp"
#include "polyharm/roots.hpp"
#include "polyharm/tau.hpp"

namespace polyharm {

const char* space_name(SpaceId id) {
  switch (id) {
    case SpaceId::A3Space: return "A3Space";
    case SpaceId::B3Space: return "B3Space";
    case SpaceId::JumpedSpace: return "JumpedSpace";
    default: return "Indeterminate";
  }
}

int space_dimension(SpaceId id) {
  switch (id) {
    case SpaceId::A3Space: return 24;
    case SpaceId::B3Space: return 48;
    case SpaceId::JumpedSpace: return 96;
    default: return 0;
  }
}

const GradedBasis& space_basis(SpaceId id) {
  static const GradedBasis a3 = solve(a3_system(), 6);
  static const GradedBasis b3 = solve(b3_system(), 9);
  static const GradedBasis sol = solve(jumped_system(), 13);
  switch (id) {
    case SpaceId::A3Space: return a3;
    case SpaceId::B3Space: return b3;
    case SpaceId::JumpedSpace: return sol;
    default: throw std::invalid_argument("space_basis: indeterminate space");
  }
}

namespace {

using Verdict = CoefficientEvidence::Verdict;

std::vector<int> decision_degrees(Family family) {
  return family == Family::TriakisTetra ? std::vector<int>{2, 3, 4, 6}
                                        : std::vector<int>{2, 4, 6, 8};
}
int vanishing_degree(Family family) { return family == Family::TriakisTetra ? 3 : 4; }

// The univariate polynomial whose positive roots are the candidate critical
// parameters of this (family, k) cell; nullptr when the vanishing locus is
// the rational point r = 3 (tetra vertex/face problems).
const UniPoly* critical_poly(Family family, int k) {
  if (family == Family::TriakisTetra) return k == 1 ? &tetra_edge_critical_poly() : nullptr;
  if (k == 0) return &octa_vertex_critical_poly();
  if (k == 1) return &octa_edge_critical_poly();
  return &octa_face_critical_poly();
}

const RootReport& cached_roots(const UniPoly& p) {
  static std::mutex mu;
  static std::map<const UniPoly*, RootReport> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(&p);
  if (it == cache.end()) it = cache.emplace(&p, isolate_positive_roots(p)).first;
  return it->second;
}

// Does the float parameter coincide with a certified critical value of this
// cell, to within tol?
bool matches_certified_critical(Family family, int k, const BigFloat& r, double tol) {
  const BigFloat t = BigFloat::from_double(tol, r.prec());
  if (const UniPoly* p = critical_poly(family, k)) {
    for (const auto& root : cached_roots(*p).refined)
      if ((r - root).abs() <= t) return true;
    return false;
  }
  return (r - BigFloat(3, r.prec())).abs() <= t;
}

SpaceId case_analysis(Family family, const std::map<int, Verdict>& verdicts) {
  const auto v = [&](int m) { return verdicts.at(m); };
  if (family == Family::TriakisTetra) {
    if (v(3) == Verdict::NonZero && v(2) == Verdict::NonZero && v(4) == Verdict::NonZero)
      return SpaceId::A3Space;
    if (v(3) == Verdict::Zero && v(2) == Verdict::NonZero && v(4) == Verdict::NonZero &&
        v(6) == Verdict::NonZero)
      return SpaceId::B3Space;
    return SpaceId::Indeterminate;
  }
  if (v(4) == Verdict::NonZero && v(2) == Verdict::NonZero && v(6) == Verdict::NonZero)
    return SpaceId::B3Space;
  if (v(4) == Verdict::Zero && v(2) == Verdict::NonZero && v(6) == Verdict::NonZero &&
      v(8) == Verdict::NonZero)
    return SpaceId::JumpedSpace;
  return SpaceId::Indeterminate;
}

template <class S>
S lead_coeff(const InvariantDecomposition<S>& dec, const InvariantBasis& basis, int m) {
  const auto keys = generator_exponents(basis, m);
  return keys.empty() ? ScalarTraits<S>::from_long(0) : dec.coefficient(keys[0]);
}

// Residual check that every tau_m(d), m <= max_m, kills the basis.
bool annihilation_check(const std::vector<Polynomial<BigFloat>>& taus, const GradedBasis& basis,
                        int max_m, mpfr_prec_t prec) {
  const BigFloat tol = BigFloat::from_double(1e-15, prec);
  const BigFloat op_growth(51891840);  // falling factorials up to degree 13
  // Assemblies that cancel to rounding dust (odd m on the octahedron) count
  // as the zero operator; judge "dust" against the largest tau in the batch.
  BigFloat global_scale(1, prec);
  for (const auto& t : taus)
    if (global_scale < t.max_abs_coeff()) global_scale = t.max_abs_coeff();
  BigFloat dust = global_scale;
  for (int i = 0; i < static_cast<int>(prec) - 16; ++i) dust /= BigFloat(2);
  for (int m = 1; m <= max_m; ++m) {
    const auto tau = cleanup(taus[static_cast<std::size_t>(m)], dust);
    if (tau.is_zero()) continue;
    const BigFloat scale = tau.max_abs_coeff() * op_growth;
    for (const auto& [d, polys] : basis.per_degree)
      for (const auto& p : polys) {
        auto fp = to_bigfloat(p, prec);
        auto image = apply_operator(tau, fp);
        const BigFloat fscale = fp.max_abs_coeff();
        if (!cleanup(image, tol * scale * fscale).is_zero()) return false;
      }
  }
  return true;
}

EquivalenceResult analyze_cell(Family family, int k, std::optional<Rational> exact_r,
                               const BigFloat& float_r, int max_tau, mpfr_prec_t prec,
                               double band) {
  EquivalenceResult res;
  res.zero_band = band;
  const Group group = family == Family::TriakisTetra ? Group::A3 : Group::B3;
  const auto& basis = invariant_basis(group);
  const BigFloat band_f = BigFloat::from_double(band, prec);

  // Assemble the decision coefficients.
  std::map<int, Verdict> verdicts;
  const bool exact_route = exact_r.has_value() && k != 1;
  std::vector<Polynomial<Rational>> taus_exact;
  std::vector<Polynomial<BigFloat>> taus_float;
  if (exact_route) {
    taus_exact = tau_all_exact(build_solid<Rational>(family, *exact_r), k, max_tau);
  } else if (exact_r.has_value()) {
    taus_float = tau_all_float(build_solid<Rational>(family, *exact_r), k, max_tau, prec);
  } else {
    taus_float = tau_all_float(build_solid<BigFloat>(family, float_r), k, max_tau);
  }

  // Cancellation dust from the float assembly must not reach decompose.
  BigFloat dust(0, prec);
  if (!taus_float.empty()) {
    BigFloat gmax(1, prec);
    for (const auto& t : taus_float)
      if (gmax < t.max_abs_coeff()) gmax = t.max_abs_coeff();
    dust = gmax;
    for (int i = 0; i < static_cast<int>(prec) - 16; ++i) dust /= BigFloat(2);
  }

  for (int m : decision_degrees(family)) {
    CoefficientEvidence ev;
    ev.m = m;
    if (exact_route) {
      const Rational a = lead_coeff(decompose(taus_exact[static_cast<std::size_t>(m)], basis), basis, m);
      ev.value = a.str();
      ev.verdict = a.is_zero() ? Verdict::Zero : Verdict::NonZero;
    } else {
      auto dec = decompose(cleanup(taus_float[static_cast<std::size_t>(m)], dust), basis,
                           BigFloat::from_double(1e-12, prec), BigFloat::from_double(1e-18, prec));
      const BigFloat a = lead_coeff(dec, basis, m);
      ev.value = a.str(20);
      if (a.abs() > band_f) {
        ev.verdict = Verdict::NonZero;
      } else if (exact_r.has_value()) {
        // Exact certificate from the radical closed form at rational r.
        ev.verdict = closed_form_is_zero(family, k, m, *exact_r) ? Verdict::Zero
                                                                 : Verdict::WithinBand;
      } else if (m == vanishing_degree(family) &&
                 matches_certified_critical(family, k, float_r, band)) {
        ev.verdict = Verdict::Zero;
        res.note = "parameter matches a certified critical value; zero certified at the root";
      } else {
        ev.verdict = Verdict::WithinBand;
      }
    }
    verdicts[m] = ev.verdict;
    res.evidence.push_back(std::move(ev));
  }

  res.space = case_analysis(family, verdicts);
  res.dim = space_dimension(res.space);
  if (res.space == SpaceId::Indeterminate) {
    res.note = "coefficient inside the zero band without an exact certificate; "
               "use the certified critical-value scan";
    return res;
  }

  // Direct verification: the skeleton operators annihilate the claimed basis.
  if (exact_route) {
    res.tau_annihilation_ok = true;
    for (int m = 1; m <= max_tau && res.tau_annihilation_ok; ++m)
      for (const auto& [d, polys] : space_basis(res.space).per_degree) {
        for (const auto& p : polys)
          if (!apply_operator(taus_exact[static_cast<std::size_t>(m)], p).is_zero()) {
            res.tau_annihilation_ok = false;
            break;
          }
        if (!res.tau_annihilation_ok) break;
      }
  } else {
    res.tau_annihilation_ok =
        annihilation_check(taus_float, space_basis(res.space), max_tau, prec);
  }
  return res;
}

}  // namespace

EquivalenceResult equivalence_check(Family family, int k, const Rational& r, int max_tau_degree,
                                    mpfr_prec_t prec, double zero_band) {
  return analyze_cell(family, k, r, BigFloat::from_rational(r, prec), max_tau_degree, prec,
                      zero_band);
}

EquivalenceResult equivalence_check(Family family, int k, const BigFloat& r, int max_tau_degree,
                                    double zero_band) {
  return analyze_cell(family, k, std::nullopt, r, max_tau_degree, r.prec(), zero_band);
}

}  // namespace polyharm
