#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "polyharm/closed_forms.hpp"
#include "polyharm/diff_ops.hpp"
#include "polyharm/invariant_basis.hpp"
#include "polyharm/tau.hpp"

using namespace polyharm;

namespace {

const mpfr_prec_t kPrec = 128;

BigFloat rel_err(const BigFloat& a, const BigFloat& b) {
  BigFloat scale = a.abs() > b.abs() ? a.abs() : b.abs();
  if (scale < BigFloat(1)) scale = BigFloat(1);
  return (a - b).abs() / scale;
}

Group group_of(Family fam) {
  return fam == Family::TriakisTetra ? Group::A3 : Group::B3;
}

// Leading coefficient a_m^(k): the coefficient on the first product in the
// canonical report order (no power of e2 in front).
template <class S>
S lead_coeff(const InvariantDecomposition<S>& dec, const InvariantBasis& basis, int m) {
  const auto keys = generator_exponents(basis, m);
  REQUIRE(!keys.empty());
  return dec.coefficient(keys[0]);
}

}  // namespace

TEST_CASE("tau vanishing cases") {
  auto tetra = build_solid<Rational>(Family::TriakisTetra, Rational(7, 3));
  CHECK(tau_vertex(tetra, 1).is_zero());
  auto octa = build_solid<Rational>(Family::TriakisOcta, Rational(5, 4));
  for (int m : {1, 3, 5, 7}) {
    CHECK(tau_vertex(octa, m).is_zero());
    CHECK(tau_face(octa, m).is_zero());
  }
  // Float assembly cancels only to rounding dust; the declared cleanup
  // tolerance is how "zero" is pronounced on that path.
  auto octa_f = build_solid_f(Family::TriakisOcta, Rational(5, 4), kPrec);
  CHECK(cleanup(tau_edge(octa_f, 1), BigFloat::from_double(1e-30, kPrec)).is_zero());
  auto tetra_f = build_solid_f(Family::TriakisTetra, Rational(7, 3), kPrec);
  CHECK(cleanup(tau_edge(tetra_f, 1), BigFloat::from_double(1e-30, kPrec)).is_zero());
  CHECK_THROWS_AS(tau_vertex(tetra, 0), std::invalid_argument);
}

TEST_CASE("tau splits into per-class components") {
  // octa vertex problem, m=2: the six axis vertices contribute 2 e2, the
  // eight apexes (8 r^2/9) e2; their sum is the full coefficient.
  const Rational r(7, 5);
  auto octa = build_solid<Rational>(Family::TriakisOcta, r);
  auto parts = tau_vertex_parts(octa, 2);
  CHECK(parts[0] == inv_e2().scaled(Rational(2)));
  CHECK(parts[1] == inv_e2().scaled(Rational(8, 9) * r * r));
  CHECK(parts[0] + parts[1] == tau_vertex(octa, 2));

  // edge problem: the weighted per-class parts reassemble tau
  const mpfr_prec_t prec = 128;
  auto inst = build_solid_f(Family::TriakisTetra, Rational(2), prec);
  auto eparts = tau_edge_parts_all(inst, 3)[3];
  const auto inc = incidence_numbers(inst);
  Polynomial<BigFloat> recomb;
  for (int t = 1; t <= 3; ++t)
    recomb += eparts[static_cast<std::size_t>(t - 1)].scaled(inc.ve(t));
  CHECK(recomb == tau_edge(inst, 3));
}

TEST_CASE("tau_vertex spot values") {
  // tetra, m=2, r=3: a_2^(0) = (4/9) 9 + 4 = 8
  auto inst = build_solid<Rational>(Family::TriakisTetra, Rational(3));
  auto dec = decompose(tau_vertex(inst, 2), invariant_basis(Group::A3));
  CHECK(lead_coeff(dec, invariant_basis(Group::A3), 2) == Rational(8));

  // octa, m=6, r=1: a_6^(0) = (2/243) * 13 * 61
  auto octa = build_solid<Rational>(Family::TriakisOcta, Rational(1));
  auto dec6 = decompose(tau_vertex(octa, 6), invariant_basis(Group::B3));
  CHECK(lead_coeff(dec6, invariant_basis(Group::B3), 6) == Rational(2 * 13 * 61, 243));
}

TEST_CASE("tau_face spot values") {
  auto inst3 = build_solid<Rational>(Family::TriakisTetra, Rational(3));
  const auto& a3basis = invariant_basis(Group::A3);
  CHECK(lead_coeff(decompose(tau_face(inst3, 3), a3basis), a3basis, 3) == Rational(0));
  CHECK(lead_coeff(decompose(tau_face(inst3, 6), a3basis), a3basis, 6) == Rational(1536));

  const Rational r(9, 5);
  auto octa = build_solid<Rational>(Family::TriakisOcta, r);
  const auto& b3basis = invariant_basis(Group::B3);
  CHECK(lead_coeff(decompose(tau_face(octa, 2), b3basis), b3basis, 2) ==
        Rational(8, 3) * (r * r + Rational(2) * r + Rational(6)));
}

TEST_CASE("tau polynomials are invariants of the solid's group") {
  for (Family fam : {Family::TriakisTetra, Family::TriakisOcta}) {
    auto inst = build_solid<Rational>(fam, Rational(5, 2));
    for (int m : {2, 3, 4, 5, 6}) {
      CHECK(is_invariant(tau_vertex(inst, m), group_of(fam)));
      CHECK(is_invariant(tau_face(inst, m), group_of(fam)));
    }
    // octa taus are invariant under all of W(B3) including sign flips
    if (fam == Family::TriakisOcta)
      CHECK(is_invariant(tau_vertex(inst, 4), Group::B3));
  }
  // float route: edge tau under a generating reflection, coefficient-wise
  auto inst = build_solid_f(Family::TriakisTetra, Rational(2), kPrec);
  auto t4 = tau_edge(inst, 4);
  SignedPerm swap12{{1, 0, 2}, {1, 1, 1}};
  auto diff = act(swap12, t4) - t4;
  CHECK(cleanup(diff, BigFloat::from_double(1e-25, kPrec) * t4.max_abs_coeff()).is_zero());
}

TEST_CASE("decompose basics") {
  const auto& a3 = invariant_basis(Group::A3);
  auto dec = decompose(inv_e2() * inv_e2(), a3);
  CHECK(dec.coefficients.size() == 1);
  CHECK(dec.coefficient({2, 0, 0}) == Rational(1));

  auto dec6 = decompose(inv_e6(), a3);
  CHECK(dec6.coefficients.size() == 1);
  CHECK(dec6.coefficient({0, 2, 0}) == Rational(1));

  // zero polynomial decomposes to nothing
  CHECK(decompose(Polynomial<Rational>::zero(), a3).coefficients.empty());

  // non-invariant input names a violating monomial
  CHECK_THROWS_WITH_AS(decompose(Polynomial<Rational>::x(1).pow(2), a3),
                       doctest::Contains("x1^2"), std::domain_error);
  CHECK_THROWS_AS(decompose(inv_e2() + inv_e3(), a3), std::invalid_argument);
}

TEST_CASE("decompose round-trips and scales linearly") {
  auto inst = build_solid<Rational>(Family::TriakisTetra, Rational(7, 2));
  const auto& a3 = invariant_basis(Group::A3);
  for (int m : {2, 3, 4, 5, 6}) {
    auto tau = tau_face(inst, m);
    auto dec = decompose(tau, a3);
    CHECK(recompose(dec, a3) == tau);

    auto scaled_dec = decompose(tau.scaled(Rational(-7, 5)), a3);
    for (const auto& [key, c] : dec.coefficients)
      CHECK(scaled_dec.coefficient(key) == c * Rational(-7, 5));
  }
}

TEST_CASE("assembled coefficients match closed forms across the grid") {
  const std::vector<Rational> grid = {Rational(1, 2), Rational(1),    Rational(3, 2),
                                      Rational(2),    Rational(5, 2), Rational(3),
                                      Rational(4),    Rational(5),    Rational(9)};
  const BigFloat tol = BigFloat::from_double(1e-10, kPrec);

  for (Family fam : {Family::TriakisTetra, Family::TriakisOcta}) {
    const auto& basis = invariant_basis(group_of(fam));
    const std::vector<int> ms = fam == Family::TriakisTetra ? std::vector<int>{2, 3, 4, 6}
                                                            : std::vector<int>{2, 4, 6, 8};
    for (const auto& r : grid) {
      auto exact_inst = build_solid<Rational>(fam, r);
      const BigFloat rf = BigFloat::from_rational(r, kPrec);

      // k = 0 and k = 2: exact pipeline, exact equality with the closed form.
      for (int k : {0, 2}) {
        auto taus = tau_all_exact(exact_inst, k, 8);
        for (int m : ms) {
          auto dec = decompose(taus[static_cast<std::size_t>(m)], basis);
          CHECK(lead_coeff(dec, basis, m) == closed_form_exact(fam, k, m, r));
        }
      }
      // k = 1: float pipeline against the radical closed form.
      auto taus1 = tau_all_float(exact_inst, 1, 8, kPrec);
      for (int m : ms) {
        auto dec = decompose(taus1[static_cast<std::size_t>(m)], basis,
                             BigFloat::from_double(1e-12, kPrec),
                             BigFloat::from_double(1e-20, kPrec));
        CHECK(rel_err(lead_coeff(dec, basis, m), closed_form(fam, 1, m, rf)) < tol);
      }
    }
  }
}

TEST_CASE("closed-form zero decisions are exact") {
  CHECK(closed_form_is_zero(Family::TriakisTetra, 0, 3, Rational(3)));
  CHECK(!closed_form_is_zero(Family::TriakisTetra, 0, 3, Rational(2)));
  CHECK(closed_form_is_zero(Family::TriakisTetra, 2, 3, Rational(3)));
  CHECK(!closed_form_is_zero(Family::TriakisTetra, 1, 3, Rational(362398, 100000)));
  CHECK(!closed_form_is_zero(Family::TriakisOcta, 1, 4, Rational(224580, 100000)));
  CHECK(!closed_form_is_zero(Family::TriakisOcta, 0, 4, Rational(178381, 100000)));
  CHECK_THROWS_AS(closed_form_exact(Family::TriakisTetra, 1, 3, Rational(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(closed_form(Family::TriakisTetra, 0, 5, BigFloat(1, kPrec)),
                  std::invalid_argument);
  CHECK(!has_closed_form(Family::TriakisTetra, 0, 5));
  CHECK(has_closed_form(Family::TriakisOcta, 3, 8));
}

TEST_CASE("float and exact tau pipelines agree to 1e-20 at 100 bits") {
  const mpfr_prec_t prec = 100;
  auto inst = build_solid<Rational>(Family::TriakisOcta, Rational(3, 2));
  auto exact = tau_all_exact(inst, 2, 6);
  auto approx = tau_all_float(to_bigfloat(inst, prec), 2, 6);
  const BigFloat tol = BigFloat::from_double(1e-20, prec);
  for (int m : {2, 4, 6}) {
    const auto& pe = exact[static_cast<std::size_t>(m)];
    const auto& pa = approx[static_cast<std::size_t>(m)];
    for (const auto& [mon, c] : pe.terms())
      CHECK(almost_equal(pa.coeff(mon), BigFloat::from_rational(c, prec), tol));
  }
}

TEST_CASE("raw face weights reproduce the normalized coefficient pattern") {
  // Scale invariance: raw-weight tau differs from normalized tau by one
  // common positive factor, so zero/nonzero patterns agree.
  auto inst = build_solid_f(Family::TriakisTetra, Rational(3), kPrec);
  auto raw3 = tau_face(inst, 3, FaceWeightMode::RawGeometric);
  auto raw6 = tau_face(inst, 6, FaceWeightMode::RawGeometric);
  auto dec3 = decompose(raw3, invariant_basis(Group::A3), BigFloat::from_double(1e-12, kPrec),
                        BigFloat::from_double(1e-18, kPrec));
  CHECK(lead_coeff(dec3, invariant_basis(Group::A3), 3).abs() <
        BigFloat::from_double(1e-20, kPrec));
  auto dec6 = decompose(raw6, invariant_basis(Group::A3), BigFloat::from_double(1e-12, kPrec),
                        BigFloat::from_double(1e-18, kPrec));
  CHECK(lead_coeff(dec6, invariant_basis(Group::A3), 6) > BigFloat(0));
  // exact route would reject raw weights
  auto exact_inst = build_solid<Rational>(Family::TriakisTetra, Rational(3));
  CHECK_THROWS_AS(tau_face(exact_inst, 3, FaceWeightMode::RawGeometric),
                  std::invalid_argument);
}
