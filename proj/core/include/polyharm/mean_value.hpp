#ifndef POLYHARM_MEAN_VALUE_HPP
#define POLYHARM_MEAN_VALUE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polyharm/pde.hpp"
#include "polyharm/polynomial.hpp"
#include "polyharm/quadrature.hpp"

namespace polyharm {

// Evaluates mean value defects |avg_{P(k)} f(x + rho y) - f(x)| for
// polynomials over one skeleton. The skeleton's monomial moments are
// integrated once; every (f, x, rho) query is then a finite binomial sum, and
// the quadrature is exact for the polynomial degrees in play, so a true
// member's defect is rounding-level.
class MeanValueEvaluator {
public:
  MeanValueEvaluator(const SolidInstance<BigFloat>& inst, int k, int degree = 15,
                     int depth = 0);

  int k() const { return k_; }
  const BigFloat& measure() const { return measure_; }
  const QuadratureRule& rule() const { return rule_; }

  BigFloat defect(const Polynomial<BigFloat>& f, const Vec3<BigFloat>& center,
                  const BigFloat& rho) const;

private:
  void extend_moments(int max_degree) const;

  int k_;
  mpfr_prec_t prec_;
  QuadratureRule rule_;
  BigFloat measure_;
  mutable int moment_degree_ = -1;
  mutable std::map<Monomial, BigFloat, MonomialOrder> moments_;  // avg of y^alpha
};

struct DefectSample {
  std::string id;
  int center = 0;
  int radius = 0;
  double defect = 0;  // defects are tiny or large, double is plenty for reporting
};

struct DefectReport {
  Family family = Family::TriakisTetra;
  std::string r;
  int k = 0;
  int centers = 0;
  std::vector<std::array<std::string, 3>> center_points;
  std::vector<std::string> radii;
  std::string measure;  // |P(k)|, the normalization of the averages
  std::vector<DefectSample> member_samples;
  std::vector<DefectSample> counterexample_samples;
  double max_member_defect = 0;
  double min_counterexample_max = 0;  // smallest over counterexamples of their max defect
  double pass_tol = 0, fail_tol = 0;
  bool pass = false;
  std::string note;
};

// Checks every basis element against the mean value property on a seeded
// grid of centers and radii, and checks that each counterexample visibly
// fails. Basis elements are normalized to unit max coefficient first.
DefectReport verify_space(const SolidInstance<BigFloat>& inst, int k, const GradedBasis& basis,
                          const std::vector<std::pair<std::string, Polynomial<Rational>>>&
                              counterexamples,
                          double pass_tol = 1e-9, double fail_tol = 1e-4, int n_centers = 5,
                          std::uint64_t seed = 0x5eed0002u);

// Single-polynomial convenience used by the CLI.
BigFloat mean_value_defect(const SolidInstance<BigFloat>& inst, int k,
                           const Polynomial<BigFloat>& f, const Vec3<BigFloat>& center,
                           const BigFloat& rho);

}  // namespace polyharm

#endif
