#include "polyharm/selfcheck.hpp"

#include <sstream>

#include "polyharm/certificates.hpp"
#include "polyharm/closed_forms.hpp"
#include "polyharm/diff_ops.hpp"
#include "polyharm/equivalence.hpp"
#include "polyharm/mean_value.hpp"
#include "polyharm/tau.hpp"

namespace polyharm {

std::string CriterionResult::summary() const {
  int ok = 0;
  for (const auto& c : checks) ok += c.pass ? 1 : 0;
  std::ostringstream os;
  os << (pass() ? "PASS" : "FAIL") << " criterion " << number << " (" << title << "): " << ok
     << "/" << checks.size() << " checks";
  if (!pass()) {
    for (const auto& c : checks)
      if (!c.pass) os << "\n    failed: " << c.id << " -- " << c.detail;
  }
  return os.str();
}

namespace {

std::string fmt(const BigFloat& x, int digits = 12) { return x.str(digits); }

BigFloat abs_diff(const BigFloat& a, double b) {
  return (a - BigFloat::from_double(b, a.prec())).abs();
}

BigFloat rel_diff(const BigFloat& a, const BigFloat& b) {
  BigFloat scale = a.abs() > b.abs() ? a.abs() : b.abs();
  if (scale < BigFloat(1)) scale = BigFloat(1);
  return (a - b).abs() / scale;
}

void check(CriterionResult& cr, const std::string& id, bool pass, const std::string& detail) {
  cr.checks.push_back({id, pass, detail});
}

// ---- criterion 1: certified critical roots ---------------------------------

CriterionResult criterion_roots(mpfr_prec_t prec) {
  CriterionResult cr{1, "critical roots with certified uniqueness", {}, };
  struct Entry {
    const UniPoly& poly;
    const char* name;
    double expect;
    double tol;
  };
  const Entry entries[] = {
      {tetra_edge_critical_poly(), "tetra edge root", 3.62398, 1e-5},
      {octa_edge_critical_poly(), "octa edge root", 2.24580, 1e-5},
      {octa_face_critical_poly(), "octa face root", 1.82977, 1e-5},
  };
  for (const auto& e : entries) {
    const auto rep = isolate_positive_roots(e.poly, Rational(1, 1000000000000L), prec);
    const bool unique = rep.squarefree && rep.positive_count == 1 && rep.intervals.size() == 1;
    const bool close = unique && abs_diff(rep.refined[0], e.expect) <=
                                     BigFloat::from_double(e.tol, prec);
    check(cr, e.name, unique && close,
          unique ? "root " + fmt(rep.refined[0]) : "root count " +
                                                       std::to_string(rep.positive_count));
  }
  const auto rep0 = isolate_positive_roots(octa_vertex_critical_poly(),
                                           Rational(1, 1000000000000L), prec);
  // r0 = 3 * 2^(-3/4)
  const BigFloat r0 = BigFloat(3, prec) / BigFloat(2, prec).sqrt().sqrt().pow(3);
  const bool ok0 = rep0.positive_count == 1 &&
                   (rep0.refined[0] - r0).abs() <= BigFloat::from_double(1e-10, prec);
  check(cr, "octa vertex root equals 3*2^(-3/4)", ok0,
        fmt(rep0.refined[0]) + " vs " + fmt(r0));
  return cr;
}

// ---- criterion 2: coefficient oracle grid ----------------------------------

CriterionResult criterion_oracle(mpfr_prec_t prec) {
  CriterionResult cr{2, "assembled coefficients equal closed forms on the grid", {}};
  const std::vector<Rational> grid = {Rational(1, 2), Rational(1),    Rational(3, 2),
                                      Rational(2),    Rational(5, 2), Rational(3),
                                      Rational(4),    Rational(5),    Rational(9)};
  const BigFloat tol = BigFloat::from_double(1e-10, prec);
  int comparisons = 0, failures = 0;
  std::string first_failure;
  for (Family fam : {Family::TriakisTetra, Family::TriakisOcta}) {
    const Group group = fam == Family::TriakisTetra ? Group::A3 : Group::B3;
    const auto& basis = invariant_basis(group);
    const std::vector<int> ms = fam == Family::TriakisTetra ? std::vector<int>{2, 3, 4, 6}
                                                            : std::vector<int>{2, 4, 6, 8};
    for (const auto& r : grid) {
      const auto inst = build_solid<Rational>(fam, r);
      for (int k : {0, 2}) {
        const auto taus = tau_all_exact(inst, k, 8);
        for (int m : ms) {
          const auto dec = decompose(taus[static_cast<std::size_t>(m)], basis);
          const Rational a = dec.coefficient(generator_exponents(basis, m)[0]);
          ++comparisons;
          if (a != closed_form_exact(fam, k, m, r)) {
            ++failures;
            if (first_failure.empty())
              first_failure = std::string(family_name(fam)) + " k=" + std::to_string(k) +
                              " m=" + std::to_string(m) + " r=" + r.str();
          }
        }
      }
      const auto taus1 = tau_all_float(inst, 1, 8, prec);
      const BigFloat rf = BigFloat::from_rational(r, prec);
      for (int m : ms) {
        const auto dec = decompose(taus1[static_cast<std::size_t>(m)], basis,
                                   BigFloat::from_double(1e-12, prec),
                                   BigFloat::from_double(1e-18, prec));
        const BigFloat a = dec.coefficient(generator_exponents(basis, m)[0]);
        ++comparisons;
        if (!(rel_diff(a, closed_form(fam, 1, m, rf)) < tol)) {
          ++failures;
          if (first_failure.empty())
            first_failure = std::string(family_name(fam)) + " k=1 m=" + std::to_string(m) +
                            " r=" + r.str();
        }
      }
    }
  }
  check(cr, "oracle grid", failures == 0,
        std::to_string(comparisons) + " comparisons, " + std::to_string(failures) +
            " failures" + (first_failure.empty() ? "" : ", first at " + first_failure));
  return cr;
}

// ---- criteria 3-5: solution spaces ------------------------------------------

void criteria_spaces(std::vector<CriterionResult>& out) {
  CriterionResult c3{3, "solution space dimensions with guard bands", {}};
  const GradedBasis a3 = solve(a3_system(), 8);
  const GradedBasis b3 = solve(b3_system(), 11);
  const GradedBasis sol = solve(jumped_system(), 15);
  check(c3, "A3 system", a3.total_dim == 24 && a3.top_nonzero_degree() == 6 &&
                             a3.dim(7) == 0 && a3.dim(8) == 0,
        "dim " + std::to_string(a3.total_dim) + ", top degree " +
            std::to_string(a3.top_nonzero_degree()));
  check(c3, "B3 system", b3.total_dim == 48 && b3.top_nonzero_degree() == 9 &&
                             b3.dim(10) == 0 && b3.dim(11) == 0,
        "dim " + std::to_string(b3.total_dim) + ", top degree " +
            std::to_string(b3.top_nonzero_degree()));
  check(c3, "jumped system", sol.total_dim == 96 && sol.top_nonzero_degree() == 13 &&
                                 sol.dim(14) == 0 && sol.dim(15) == 0,
        "dim " + std::to_string(sol.total_dim) + ", top degree " +
            std::to_string(sol.top_nonzero_degree()));
  out.push_back(std::move(c3));

  CriterionResult c4{4, "generator identities and module spans", {}};
  check(c4, "e2(d)F = 0", apply_operator(inv_e2(), jumped_generator()).is_zero(), "");
  check(c4, "e6(d)F = 0", apply_operator(inv_e6(), jumped_generator()).is_zero(), "");
  check(c4, "e4(d)F = -15120 alt_b3",
        apply_operator(inv_e4(), jumped_generator()) ==
            alternating_b3().scaled(Rational(-15120)),
        "");
  check(c4, "span(F) equals the jumped kernel",
        equal_bases(module_span(jumped_generator(), 13), sol, 13), "");
  check(c4, "span(alt_b3) equals the B3 kernel",
        equal_bases(module_span(alternating_b3(), 9), b3, 9), "");
  out.push_back(std::move(c4));

  CriterionResult c5{5, "exact sequence 0 -> H(B3) -> Sol -> H(B3) -> 0", {}};
  const auto rep = verify_exact_sequence(13);
  std::string detail = "dim Sol " + std::to_string(rep.dim_sol) + ", dim B3 " +
                       std::to_string(rep.dim_b3);
  for (const auto& f : rep.failures) detail += "; " + f;
  check(c5, "inclusion, image, kernel, dimensions", rep.ok(), detail);
  out.push_back(std::move(c5));
}

// ---- criterion 6: radical identities ----------------------------------------

CriterionResult criterion_identities(mpfr_prec_t prec) {
  CriterionResult cr{6, "radical factorization identities", {}};
  for (Family fam : {Family::TriakisTetra, Family::TriakisOcta}) {
    const auto rep = verify_radical_identity(fam, 20, prec);
    check(cr, std::string(family_name(fam)) + " identity", rep.ok(),
          "max relative difference " + fmt(rep.max_rel_diff));
  }
  return cr;
}

// ---- criterion 7: spot numerics ---------------------------------------------

CriterionResult criterion_spots(mpfr_prec_t prec) {
  CriterionResult cr{7, "spot numerics from the reference tables", {}};

  const auto tetra_root =
      isolate_positive_roots(tetra_edge_critical_poly(), Rational(1, 1000000000000L), prec);
  const BigFloat a6 = closed_form(Family::TriakisTetra, 1, 6, tetra_root.refined[0]);
  // Reference says 1661.36 +- 0.01; the value computed from the closed form
  // (and, independently, from the geometric assembly -- see the unit suite)
  // is 4930.167, while dropping the radical factor reproduces 1661.357.
  // The literal check is kept and fails; the diagnostic pins all three numbers.
  check(cr, "tetra edge companion a6 at its root (stated 1661.36 +- 0.01)",
        abs_diff(a6, 1661.36) <= BigFloat::from_double(0.01, prec),
        "computed " + fmt(a6) + "; stated 1661.36 matches the closed form with its radical "
        "factor dropped (1661.3572); two independent routes agree on " + fmt(a6));

  const auto octa_root =
      isolate_positive_roots(octa_edge_critical_poly(), Rational(1, 1000000000000L), prec);
  const BigFloat a8e = closed_form(Family::TriakisOcta, 1, 8, octa_root.refined[0]);
  check(cr, "octa edge companion a8 at its root", abs_diff(a8e, 54.1247) <=
                                                      BigFloat::from_double(1e-3, prec),
        "computed " + fmt(a8e));

  const auto face_root =
      isolate_positive_roots(octa_face_critical_poly(), Rational(1, 1000000000000L), prec);
  const BigFloat a8f = closed_form(Family::TriakisOcta, 2, 8, face_root.refined[0]);
  check(cr, "octa face companion a8 at its root", abs_diff(a8f, 13.2853) <=
                                                      BigFloat::from_double(1e-3, prec),
        "computed " + fmt(a8f));

  const auto sc = sign_certificates(Family::TriakisOcta, prec);
  check(cr, "octa face a6 minimum location and value",
        abs_diff(sc.min_value, 22.0304) <= BigFloat::from_double(1e-3, prec) &&
            abs_diff(sc.min_location, 0.743471) <= BigFloat::from_double(1e-4, prec),
        "min " + fmt(sc.min_value) + " at r = " + fmt(sc.min_location));
  return cr;
}

// ---- criterion 8: mean value property ---------------------------------------

CriterionResult criterion_mean_value(mpfr_prec_t prec) {
  CriterionResult cr{8, "mean value property at the critical instances", {}};
  std::vector<std::pair<std::string, Polynomial<Rational>>> e2_only;
  e2_only.emplace_back("e2", inv_e2());

  struct Instance {
    Family family;
    int k;
    SpaceId space;
    const char* name;
  };
  const Instance instances[] = {
      {Family::TriakisTetra, 1, SpaceId::B3Space, "tetra k=1 at its root"},
      {Family::TriakisOcta, 0, SpaceId::JumpedSpace, "octa k=0 at its root"},
      {Family::TriakisOcta, 1, SpaceId::JumpedSpace, "octa k=1 at its root"},
      {Family::TriakisOcta, 2, SpaceId::JumpedSpace, "octa k=2 at its root"},
  };
  for (const auto& item : instances) {
    const auto scan = critical_scan(item.family, item.k, prec);
    if (scan.points.size() != 1) {
      check(cr, item.name, false, "expected one critical point");
      continue;
    }
    const auto inst = build_solid<BigFloat>(item.family, scan.points[0].r);
    const auto rep = verify_space(inst, item.k, space_basis(item.space), e2_only);
    // every member below 1e-9 and e2 above 1e-3 at every sample
    double e2_min = -1;
    for (const auto& s : rep.counterexample_samples)
      if (e2_min < 0 || s.defect < e2_min) e2_min = s.defect;
    check(cr, item.name, rep.max_member_defect < 1e-9 && e2_min > 1e-3,
          "max member defect " + std::to_string(rep.max_member_defect) +
              ", min e2 defect " + std::to_string(e2_min));
  }

  // F visibly fails the vertex problem away from the critical parameter.
  const auto inst = build_solid_f(Family::TriakisOcta, Rational(2), prec);
  std::vector<std::pair<std::string, Polynomial<Rational>>> f_only;
  f_only.emplace_back("F", jumped_generator());
  const auto rep = verify_space(inst, 0, space_basis(SpaceId::B3Space), f_only);
  check(cr, "F fails at octa r=2, k=0", rep.min_counterexample_max > 1e-4,
        "max F defect " + std::to_string(rep.min_counterexample_max));
  return cr;
}

// ---- criterion 9: truth table -----------------------------------------------

CriterionResult criterion_truth_table(mpfr_prec_t prec) {
  CriterionResult cr{9, "critical truth table", {}};

  for (int k : {0, 2, 3}) {
    const auto scan = critical_scan(Family::TriakisTetra, k, prec);
    bool noted = false;
    for (const auto& n : scan.notes)
      if (n.find("group jumps simultaneously") != std::string::npos) noted = true;
    // At r = 3 the space does jump to the cube harmonics, matched by the group.
    const auto eq = equivalence_check(Family::TriakisTetra, k, Rational(3));
    check(cr, "tetra k=" + std::to_string(k) + " has no critical value",
          scan.points.empty() && noted && eq.space == SpaceId::B3Space,
          "space at r=3 is " + std::string(space_name(eq.space)));
  }
  {
    const auto scan = critical_scan(Family::TriakisTetra, 1, prec);
    check(cr, "tetra k=1 critical set is {3.62398...}",
          scan.points.size() == 1 &&
              abs_diff(scan.points[0].r, 3.62398) <= BigFloat::from_double(1e-5, prec) &&
              scan.points[0].space == SpaceId::B3Space && scan.points[0].dim == 48 &&
              scan.points[0].companion_value.abs() > BigFloat(1, prec),
          scan.points.empty() ? "empty" : "r = " + fmt(scan.points[0].r));
  }
  const double expected_r[4] = {1.78381, 2.24580, 1.82977, 1.82977};
  for (int k = 0; k <= 3; ++k) {
    const auto scan = critical_scan(Family::TriakisOcta, k, prec);
    check(cr, "octa k=" + std::to_string(k) + " critical set",
          scan.points.size() == 1 &&
              abs_diff(scan.points[0].r, expected_r[k]) <= BigFloat::from_double(1e-5, prec) &&
              scan.points[0].space == SpaceId::JumpedSpace && scan.points[0].dim == 96 &&
              scan.points[0].companion_value.abs() > BigFloat(1, prec) &&
              scan.points[0].vanishing_residual < BigFloat::from_double(1e-8, prec),
          scan.points.empty() ? "empty" : "r = " + fmt(scan.points[0].r));
  }
  return cr;
}

}  // namespace

SelfCheckReport run_selfcheck(mpfr_prec_t precision) {
  SelfCheckReport rep;
  mpfr_prec_t prec = precision;
  if (prec < 128) {
    rep.warnings.push_back("precision " + std::to_string(prec) +
                           " raised to 128 bits for the identity and defect tolerances");
    prec = 128;
  }
  rep.criteria.push_back(criterion_roots(prec));
  rep.criteria.push_back(criterion_oracle(prec));
  criteria_spaces(rep.criteria);
  rep.criteria.push_back(criterion_identities(prec));
  rep.criteria.push_back(criterion_spots(prec));
  rep.criteria.push_back(criterion_mean_value(prec));
  rep.criteria.push_back(criterion_truth_table(prec));
  return rep;
}

}  // namespace polyharm
