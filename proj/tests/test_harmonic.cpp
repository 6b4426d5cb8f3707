#include <doctest.h>

#include <vector>

#include "polyharm/diff_ops.hpp"
#include "polyharm/pde.hpp"
#include "polyharm/tau.hpp"

using namespace polyharm;

namespace {

// Hilbert series of the three solution spaces, derived from the coinvariant
// degrees (2,3,4 and 2,4,6) and, for the jumped space, from splicing two
// B3 series four degrees apart. Frozen as the dimension oracle.
const std::vector<int> kA3Dims = {1, 3, 5, 6, 5, 3, 1};
const std::vector<int> kB3Dims = {1, 3, 5, 7, 8, 8, 7, 5, 3, 1};
const std::vector<int> kSolDims = {1, 3, 5, 7, 9, 11, 12, 12, 11, 9, 7, 5, 3, 1};

}  // namespace

TEST_CASE("laplace kernel alone: spherical harmonic count in degree 2") {
  PdeSystem laplace{"laplace", {inv_e2()}};
  auto basis = solve(laplace, 2);
  CHECK(basis.dim(2) == 5);
  CHECK(basis.dim(1) == 3);
  CHECK(basis.dim(0) == 1);
}

TEST_CASE("graded dimensions of the three systems, with guard bands") {
  auto a3 = solve(a3_system(), 8);
  CHECK(a3.total_dim == 24);
  CHECK(a3.top_nonzero_degree() == 6);
  for (std::size_t d = 0; d < kA3Dims.size(); ++d)
    CHECK(a3.dim(static_cast<int>(d)) == kA3Dims[d]);
  CHECK(a3.dim(7) == 0);
  CHECK(a3.dim(8) == 0);

  auto b3 = solve(b3_system(), 11);
  CHECK(b3.total_dim == 48);
  CHECK(b3.top_nonzero_degree() == 9);
  for (std::size_t d = 0; d < kB3Dims.size(); ++d)
    CHECK(b3.dim(static_cast<int>(d)) == kB3Dims[d]);
  CHECK(b3.dim(10) == 0);
  CHECK(b3.dim(11) == 0);

  auto sol = solve(jumped_system(), 15);
  CHECK(sol.total_dim == 96);
  CHECK(sol.top_nonzero_degree() == 13);
  for (std::size_t d = 0; d < kSolDims.size(); ++d)
    CHECK(sol.dim(static_cast<int>(d)) == kSolDims[d]);
  CHECK(sol.dim(14) == 0);
  CHECK(sol.dim(15) == 0);
}

TEST_CASE("every basis element is annihilated by every system generator") {
  for (const auto& [system, maxd] :
       std::vector<std::pair<PdeSystem, int>>{{a3_system(), 6}, {b3_system(), 9},
                                              {jumped_system(), 13}}) {
    auto basis = solve(system, maxd);
    for (const auto& [d, polys] : basis.per_degree)
      for (const auto& p : polys)
        for (const auto& g : system.generators) CHECK(apply_operator(g, p).is_zero());
  }
}

TEST_CASE("solve is stable under degree extension") {
  auto lo = solve(b3_system(), 6);
  auto hi = solve(b3_system(), 9);
  for (int d = 0; d <= 6; ++d) CHECK(lo.per_degree.at(d) == hi.per_degree.at(d));
}

TEST_CASE("module spans of the alternating generators reproduce the kernels") {
  CHECK(equal_bases(module_span(alternating_a3(), 6), solve(a3_system(), 6), 6));
  CHECK(equal_bases(module_span(alternating_b3(), 9), solve(b3_system(), 9), 9));
  CHECK(module_span(alternating_b3(), 9).total_dim == 48);
}

TEST_CASE("the jumped space is generated by F under differentiation") {
  auto span = module_span(jumped_generator(), 13);
  CHECK(span.total_dim == 96);
  CHECK(equal_bases(span, solve(jumped_system(), 13), 13));
}

TEST_CASE("module span of a constant is just the constants") {
  auto span = module_span(Polynomial<Rational>::constant(Rational(1)), 4);
  CHECK(span.total_dim == 1);
  CHECK(span.dim(0) == 1);
  for (int d = 1; d <= 4; ++d) CHECK(span.dim(d) == 0);
}

TEST_CASE("exact sequence: 0 -> H(B3) -> Sol -> H(B3) -> 0") {
  auto rep = verify_exact_sequence(13);
  CHECK(rep.ok());
  CHECK(rep.dim_sol == 96);
  CHECK(rep.dim_b3 == 48);
  for (const auto& f : rep.failures) MESSAGE(f);
}

TEST_CASE("generator identities for F") {
  CHECK(apply_operator(inv_e2(), jumped_generator()).is_zero());
  CHECK(apply_operator(inv_e6(), jumped_generator()).is_zero());
  CHECK(apply_operator(inv_e4(), jumped_generator()) ==
        alternating_b3().scaled(Rational(-15120)));
}

TEST_CASE("inclusion: group harmonics solve the skeleton systems") {
  // tau_m^(k)(d) annihilates every group harmonic, for m <= 8, exact route.
  auto a3 = solve(a3_system(), 6);
  auto b3 = solve(b3_system(), 9);
  for (const auto& r : {Rational(1, 2), Rational(2), Rational(5)}) {
    auto tetra = build_solid<Rational>(Family::TriakisTetra, r);
    auto octa = build_solid<Rational>(Family::TriakisOcta, r);
    for (int k : {0, 2}) {
      auto tetra_tau = tau_all_exact(tetra, k, 8);
      auto octa_tau = tau_all_exact(octa, k, 8);
      for (int m = 1; m <= 8; ++m) {
        for (const auto& [d, polys] : a3.per_degree)
          for (const auto& p : polys)
            CHECK(apply_operator(tetra_tau[static_cast<std::size_t>(m)], p).is_zero());
        for (const auto& [d, polys] : b3.per_degree)
          for (const auto& p : polys)
            CHECK(apply_operator(octa_tau[static_cast<std::size_t>(m)], p).is_zero());
      }
    }
  }
}

TEST_CASE("inclusion holds on the float edge route as well") {
  const mpfr_prec_t prec = 128;
  auto b3 = solve(b3_system(), 9);
  auto octa = build_solid<Rational>(Family::TriakisOcta, Rational(2));
  auto taus = tau_all_float(octa, 1, 8, prec);
  const BigFloat tol = BigFloat::from_double(1e-18, prec);
  for (int m = 2; m <= 8; m += 2) {
    const BigFloat scale = taus[static_cast<std::size_t>(m)].max_abs_coeff();
    for (const auto& [d, polys] : b3.per_degree)
      for (const auto& p : polys) {
        auto image = apply_operator(taus[static_cast<std::size_t>(m)], to_bigfloat(p, prec));
        const BigFloat fscale = BigFloat::from_rational(p.max_abs_coeff(), prec);
        CHECK(cleanup(image, tol * scale * fscale).is_zero());
      }
  }
}
