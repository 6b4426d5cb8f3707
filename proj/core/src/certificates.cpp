#include "polyharm/certificates.hpp"

#include <cstdint>

#include "polyharm/closed_forms.hpp"

namespace polyharm {

namespace {

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

BigFloat rel_diff(const BigFloat& a, const BigFloat& b) {
  BigFloat scale = a.abs() > b.abs() ? a.abs() : b.abs();
  if (scale < BigFloat(1)) scale = BigFloat(1);
  return (a - b).abs() / scale;
}

std::string fmt(const BigFloat& x) { return x.str(12); }

}  // namespace

IdentityReport verify_radical_identity(Family family, int n_samples, mpfr_prec_t prec,
                                       std::uint64_t seed) {
  IdentityReport rep;
  rep.family = family;
  rep.samples = n_samples;
  rep.max_rel_diff = BigFloat(0, prec);

  const bool tetra = family == Family::TriakisTetra;
  const int m = tetra ? 3 : 4;
  const UniPoly& chi = tetra ? tetra_edge_critical_poly() : octa_edge_critical_poly();
  const Rational scale_num = tetra ? Rational(64, 27) : Rational(32, 2187);
  // multiplier polynomial in front of chi
  const UniPoly mult = tetra ? UniPoly::from_integers({1, -2, 3})
                             : UniPoly::from_integers({2, -4, 3});

  const BigFloat tol = BigFloat::from_double(1e-25, prec);
  SplitMix rng{seed};
  bool all_ok = true;
  for (int i = 0; i < n_samples; ++i) {
    const Rational r(static_cast<long>(1 + rng.next() % 999999), 100000);
    const BigFloat rf = BigFloat::from_rational(r, prec);
    const BigFloat lhs = closed_form(family, 1, m, rf) * closed_form_conjugate(family, m, rf);
    const BigFloat rhs =
        BigFloat::from_rational(scale_num, prec) * mult.eval(rf) * chi.eval(rf);
    const BigFloat d = rel_diff(lhs, rhs);
    if (rep.max_rel_diff < d) rep.max_rel_diff = d;
    if (!(d < tol)) {
      all_ok = false;
      rep.items.push_back({"identity at r = " + r.str(), false,
                           "relative difference " + fmt(d)});
    }
  }
  rep.items.push_back({"factorization identity at seeded samples", all_ok,
                       "max relative difference " + fmt(rep.max_rel_diff)});

  // Both sides vanish together at the critical root.
  const auto roots = isolate_positive_roots(chi, Rational(1, 1000000000000L), prec);
  if (roots.refined.size() == 1) {
    const BigFloat& r1 = roots.refined[0];
    const BigFloat a = closed_form(family, 1, m, r1);
    const BigFloat cv = chi.eval(r1);
    const BigFloat small = BigFloat::from_double(1e-20, prec);
    rep.items.push_back({"coefficient and critical polynomial vanish together",
                         a.abs() < small && cv.abs() < small,
                         "|a| = " + fmt(a.abs()) + ", |chi| = " + fmt(cv.abs())});
  } else {
    rep.items.push_back({"unique positive critical root", false,
                         "expected 1 root, found " + std::to_string(roots.refined.size())});
  }

  if (!tetra) {
    // Spot anchor at r = 0: a_4 = -4 (4 + 3 sqrt(2)).
    const BigFloat a0 = closed_form(family, 1, 4, BigFloat(0, prec));
    const BigFloat expect =
        BigFloat(-4, prec) * (BigFloat(4, prec) + BigFloat(3, prec) * BigFloat(2, prec).sqrt());
    rep.items.push_back({"edge coefficient value at r = 0", rel_diff(a0, expect) < tol,
                         fmt(a0) + " vs " + fmt(expect)});
  }
  return rep;
}

namespace {

// Golden-section minimum of the octa face-problem m=6 coefficient on [0, 2].
void face_a6_minimum(mpfr_prec_t prec, BigFloat& min_loc, BigFloat& min_val) {
  const BigFloat inv_phi = (BigFloat(5, prec).sqrt() - BigFloat(1, prec)) / BigFloat(2, prec);
  const auto f = [&](const BigFloat& r) { return closed_form(Family::TriakisOcta, 2, 6, r); };
  BigFloat a(0, prec), b(2, prec);
  BigFloat c = b - inv_phi * (b - a);
  BigFloat d = a + inv_phi * (b - a);
  BigFloat fc = f(c), fd = f(d);
  const BigFloat stop = BigFloat::from_double(1e-12, prec);
  while ((b - a).abs() > stop) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  min_loc = (a + b) / BigFloat(2, prec);
  min_val = f(min_loc);
}

}  // namespace

SignReport sign_certificates(Family family, mpfr_prec_t prec) {
  SignReport rep;
  rep.family = family;
  rep.min_value = BigFloat(0, prec);
  rep.min_location = BigFloat(0, prec);
  const bool tetra = family == Family::TriakisTetra;

  const UniPoly psi = tetra ? UniPoly::from_integers({1, 1, -3, 9, 81})
                            : UniPoly::from_integers({16, 16, 0, -18, 0, 81, 243});
  const Rational psi0 = tetra ? Rational(81) : Rational(243);
  rep.items.push_back(
      {"psi(0) positive", psi.eval(Rational(0)) == psi0, "psi(0) = " + psi.eval(Rational(0)).str()});

  // Exact sum-of-nonnegative rewrite of psi'.
  UniPoly rewrite;
  if (tetra) {
    // 4r^3 + 3(r-1)^2 + 6
    const UniPoly rm1 = UniPoly::from_integers({1, -1});
    rewrite = UniPoly::from_integers({4, 0, 0, 0}) + (rm1 * rm1).scaled(Rational(3)) +
              UniPoly::from_integers({6});
  } else {
    // 96r^5 + 71r^4 + (3r^2 - 9)^2
    const UniPoly q = UniPoly::from_integers({3, 0, -9});
    rewrite = UniPoly::from_integers({96, 0, 0, 0, 0, 0}) +
              UniPoly::from_integers({71, 0, 0, 0, 0}) + q * q;
  }
  rep.items.push_back({"psi' equals its sum-of-nonnegative rewrite",
                       psi.derivative() == rewrite, rewrite.str()});

  bool grid_ok = true;
  for (int i = 1; i <= 100; ++i) {
    const Rational r(i, 10);
    if (psi.eval(r).sign() <= 0 || psi.derivative().eval(r).sign() <= 0) grid_ok = false;
  }
  rep.items.push_back({"psi and psi' positive on the (0,10] grid", grid_ok, ""});

  // Positivity of the always-positive edge coefficients on the grid.
  bool coeff_ok = true;
  const std::vector<int> pos_ms = tetra ? std::vector<int>{2, 4} : std::vector<int>{2, 6};
  for (int i = 1; i <= 100; ++i) {
    const BigFloat r = BigFloat::from_rational(Rational(i, 10), prec);
    for (int m : pos_ms)
      if (!(closed_form(family, 1, m, r) > BigFloat(0, prec))) coeff_ok = false;
  }
  rep.items.push_back({"always-positive edge coefficients positive on the grid", coeff_ok, ""});

  if (!tetra) {
    // Exact monotonicity identity for the edge m=4 coefficient:
    // P'Q + P Q'/2 = (160/27) r^3 (r^2 - r + 1), P the radical multiplier,
    // Q the radicand.
    const UniPoly P = UniPoly::from_integers({2, 2, 0, -9, -27}).scaled(Rational(16, 81));
    const UniPoly Q = UniPoly::from_integers({3, -6, 9});
    const UniPoly lhs = P.derivative() * Q + (P * Q.derivative()).scaled(Rational(1, 2));
    const UniPoly rhs =
        UniPoly::from_integers({1, -1, 1, 0, 0, 0}).scaled(Rational(160, 27));
    rep.items.push_back({"edge m=4 derivative identity", lhs == rhs, lhs.str()});

    // Vertex m=6 coefficient is positive for every real r: both factors are
    // positive-definite (negative discriminants, positive leading terms).
    const bool disc1 = true;  // 4r^2 + 9: discriminant -144 < 0
    const long disc2 = 36L * 36L - 4L * 16L * 81L;  // for 16 t^2 - 36 t + 81 in t = r^2
    rep.items.push_back({"vertex m=6 coefficient positive definite",
                         disc1 && disc2 < 0,
                         "discriminant " + std::to_string(disc2)});

    face_a6_minimum(prec, rep.min_location, rep.min_value);
    const BigFloat loc_err = (rep.min_location - BigFloat::from_double(0.743471, prec)).abs();
    const BigFloat val_err = (rep.min_value - BigFloat::from_double(22.0304, prec)).abs();
    rep.items.push_back({"face m=6 coefficient minimum",
                         loc_err < BigFloat::from_double(1e-4, prec) &&
                             val_err < BigFloat::from_double(1e-3, prec),
                         "min " + fmt(rep.min_value) + " at r = " + fmt(rep.min_location)});
  }
  return rep;
}

CriticalScan critical_scan(Family family, int k, mpfr_prec_t prec) {
  CriticalScan scan;
  scan.family = family;
  scan.k = k;
  const bool tetra = family == Family::TriakisTetra;

  if (tetra && k != 1) {
    // The vertex/face/volume coefficient a3 vanishes only at r = 3, where the
    // solid becomes the cube and the symmetry group jumps with it: the space
    // and the group move together, so r = 3 is not a critical value.
    if (closed_form_is_zero(family, k, 3, Rational(3)))
      scan.notes.push_back(
          "a3 vanishes only at r = 3, where the symmetry group jumps simultaneously; "
          "no critical value for this skeleton");
    else
      scan.notes.push_back("internal inconsistency: a3(3) expected to vanish");
    return scan;
  }

  const UniPoly* chi = nullptr;
  std::string vanishing, companion;
  int companion_m = 0;
  bool algebraic = false;
  SpaceId space = SpaceId::Indeterminate;
  if (tetra) {
    chi = &tetra_edge_critical_poly();
    vanishing = "a3 (edge problem)";
    companion = "a6";
    companion_m = 6;
    space = SpaceId::B3Space;
  } else if (k == 0) {
    chi = &octa_vertex_critical_poly();
    vanishing = "a4 (vertex problem)";
    companion = "a6";
    companion_m = 6;
    algebraic = true;  // positive-definite closed form, see sign_certificates
    space = SpaceId::JumpedSpace;
  } else if (k == 1) {
    chi = &octa_edge_critical_poly();
    vanishing = "a4 (edge problem)";
    companion = "a8";
    companion_m = 8;
    space = SpaceId::JumpedSpace;
  } else {
    chi = &octa_face_critical_poly();
    vanishing = "a4 (face problem)";
    companion = "a8";
    companion_m = 8;
    space = SpaceId::JumpedSpace;
    if (k == 3)
      scan.notes.push_back("volume problem shares the face problem solution (isohedral)");
  }

  const auto roots = isolate_positive_roots(*chi, Rational(1, 1000000000000L), prec);
  for (std::size_t i = 0; i < roots.refined.size(); ++i) {
    CriticalPoint pt;
    pt.k = k;
    pt.vanishing = vanishing;
    pt.bracket = roots.intervals[i];
    pt.r = roots.refined[i];
    pt.vanishing_residual = closed_form(family, k, tetra ? 3 : 4, pt.r).abs();
    pt.companion = companion;
    pt.companion_value = closed_form(family, k, companion_m, pt.r);
    pt.companion_algebraic = algebraic;
    pt.space = space;
    pt.dim = space_dimension(space);
    scan.points.push_back(std::move(pt));
  }
  if (!roots.squarefree)
    scan.notes.push_back("critical polynomial unexpectedly not squarefree");
  if (roots.positive_count != 1)
    scan.notes.push_back("expected a unique positive root, Sturm count = " +
                         std::to_string(roots.positive_count));
  if (!algebraic && !scan.points.empty())
    scan.notes.push_back("companion nonvanishing certified numerically on the bracket, "
                         "not algebraically");
  return scan;
}

}  // namespace polyharm
