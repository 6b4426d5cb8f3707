#include "polyharm/mean_value.hpp"

#include <stdexcept>

namespace polyharm {

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

}  // namespace

MeanValueEvaluator::MeanValueEvaluator(const SolidInstance<BigFloat>& inst, int k, int degree,
                                       int depth)
    : k_(k), prec_(inst.r.prec()), rule_(skeleton_rule(inst, k, degree, depth)),
      measure_(rule_.total_weight) {
  if (!(measure_ > BigFloat(0, prec_)))
    throw std::logic_error("MeanValueEvaluator: nonpositive skeleton measure");
}

void MeanValueEvaluator::extend_moments(int max_degree) const {
  if (max_degree <= moment_degree_) return;
  // Power tables per node, accumulated into every monomial of degree <= max.
  std::map<Monomial, BigFloat, MonomialOrder> acc;
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& m : monomials_of_degree(d)) acc.emplace(m, BigFloat(0, prec_));
  const int n = max_degree;
  for (const auto& node : rule_.nodes) {
    std::array<std::vector<BigFloat>, 3> pw;
    for (int axis = 0; axis < 3; ++axis) {
      pw[static_cast<std::size_t>(axis)].reserve(static_cast<std::size_t>(n) + 1);
      pw[static_cast<std::size_t>(axis)].push_back(BigFloat(1, prec_));
      for (int e = 1; e <= n; ++e)
        pw[static_cast<std::size_t>(axis)].push_back(
            pw[static_cast<std::size_t>(axis)].back() * node.y[static_cast<std::size_t>(axis)]);
    }
    for (auto& [mon, sum] : acc)
      sum += node.w * pw[0][static_cast<std::size_t>(mon.e[0])] *
             pw[1][static_cast<std::size_t>(mon.e[1])] * pw[2][static_cast<std::size_t>(mon.e[2])];
  }
  for (auto& [mon, sum] : acc) moments_[mon] = sum / measure_;
  moment_degree_ = max_degree;
}

BigFloat MeanValueEvaluator::defect(const Polynomial<BigFloat>& f, const Vec3<BigFloat>& center,
                                    const BigFloat& rho) const {
  const int deg = std::max(f.degree(), 0);
  extend_moments(deg);

  std::array<std::vector<BigFloat>, 3> cpow;
  std::vector<BigFloat> rpow;
  for (int axis = 0; axis < 3; ++axis) {
    cpow[static_cast<std::size_t>(axis)].push_back(BigFloat(1, prec_));
    for (int e = 1; e <= deg; ++e)
      cpow[static_cast<std::size_t>(axis)].push_back(
          cpow[static_cast<std::size_t>(axis)].back() * center[static_cast<std::size_t>(axis)]);
  }
  rpow.push_back(BigFloat(1, prec_));
  for (int e = 1; e <= deg; ++e) rpow.push_back(rpow.back() * rho);

  // avg f(center + rho y) = sum_beta c_beta sum_{alpha <= beta}
  //   C(beta, alpha) center^(beta - alpha) rho^|alpha| M_alpha.
  BigFloat avg(0, prec_);
  for (const auto& [beta, c] : f.terms()) {
    BigFloat s(0, prec_);
    Monomial alpha;
    for (alpha.e[0] = 0; alpha.e[0] <= beta.e[0]; ++alpha.e[0])
      for (alpha.e[1] = 0; alpha.e[1] <= beta.e[1]; ++alpha.e[1])
        for (alpha.e[2] = 0; alpha.e[2] <= beta.e[2]; ++alpha.e[2]) {
          const long b = binom(beta.e[0], alpha.e[0]) * binom(beta.e[1], alpha.e[1]) *
                         binom(beta.e[2], alpha.e[2]);
          s += BigFloat(b, prec_) * cpow[0][static_cast<std::size_t>(beta.e[0] - alpha.e[0])] *
               cpow[1][static_cast<std::size_t>(beta.e[1] - alpha.e[1])] *
               cpow[2][static_cast<std::size_t>(beta.e[2] - alpha.e[2])] *
               rpow[static_cast<std::size_t>(alpha.degree())] * moments_.at(alpha);
        }
    avg += c * s;
  }
  return (avg - f.evaluate(center)).abs();
}

BigFloat mean_value_defect(const SolidInstance<BigFloat>& inst, int k,
                           const Polynomial<BigFloat>& f, const Vec3<BigFloat>& center,
                           const BigFloat& rho) {
  MeanValueEvaluator ev(inst, k);
  return ev.defect(f, center, rho);
}

DefectReport verify_space(const SolidInstance<BigFloat>& inst, int k, const GradedBasis& basis,
                          const std::vector<std::pair<std::string, Polynomial<Rational>>>&
                              counterexamples,
                          double pass_tol, double fail_tol, int n_centers,
                          std::uint64_t seed) {
  const mpfr_prec_t prec = inst.r.prec();
  DefectReport rep;
  rep.family = inst.family;
  rep.r = inst.r.str(20);
  rep.k = k;
  rep.centers = n_centers;
  rep.pass_tol = pass_tol;
  rep.fail_tol = fail_tol;
  rep.note = "degenerate parameters keep coincident faces as distinct sheets; "
             "the measure counts multiplicity";

  MeanValueEvaluator ev(inst, k);
  rep.measure = ev.measure().str(20);

  std::vector<Vec3<BigFloat>> centers;
  SplitMix rng{seed};
  for (int i = 0; i < n_centers; ++i) {
    Vec3<BigFloat> c{BigFloat(0, prec), BigFloat(0, prec), BigFloat(0, prec)};
    for (int axis = 0; axis < 3; ++axis) {
      // components in [-1, 1], dyadic so they are exact at any precision
      const long v = static_cast<long>(rng.next() % 131073) - 65536;
      c[static_cast<std::size_t>(axis)] =
          BigFloat(v, prec) / BigFloat(65536, prec);
    }
    centers.push_back(c);
    rep.center_points.push_back({c[0].str(15), c[1].str(15), c[2].str(15)});
  }
  const std::vector<Rational> radii = {Rational(1, 2), Rational(1), Rational(2)};
  for (const auto& q : radii) rep.radii.push_back(q.str());

  const BigFloat one(1, prec);
  int member_index = 0;
  for (const auto& [d, polys] : basis.per_degree)
    for (const auto& p : polys) {
      auto f = to_bigfloat(p, prec);
      const BigFloat scale = f.max_abs_coeff();
      if (!scale.is_zero()) f = f.scaled(one / scale);
      const std::string id = "basis[" + std::to_string(member_index++) + "] deg " +
                             std::to_string(d);
      for (int ci = 0; ci < n_centers; ++ci)
        for (std::size_t ri = 0; ri < radii.size(); ++ri) {
          const BigFloat defect =
              ev.defect(f, centers[static_cast<std::size_t>(ci)],
                        BigFloat::from_rational(radii[ri], prec));
          const double dd = defect.to_double();
          rep.member_samples.push_back({id, ci, static_cast<int>(ri), dd});
          if (dd > rep.max_member_defect) rep.max_member_defect = dd;
        }
    }

  rep.min_counterexample_max = -1;
  for (const auto& [name, cp] : counterexamples) {
    auto f = to_bigfloat(cp, prec);
    const BigFloat scale = f.max_abs_coeff();
    if (!scale.is_zero()) f = f.scaled(one / scale);
    double worst = 0;
    for (int ci = 0; ci < n_centers; ++ci)
      for (std::size_t ri = 0; ri < radii.size(); ++ri) {
        const BigFloat defect = ev.defect(f, centers[static_cast<std::size_t>(ci)],
                                          BigFloat::from_rational(radii[ri], prec));
        const double dd = defect.to_double();
        rep.counterexample_samples.push_back({name, ci, static_cast<int>(ri), dd});
        if (dd > worst) worst = dd;
      }
    if (rep.min_counterexample_max < 0 || worst < rep.min_counterexample_max)
      rep.min_counterexample_max = worst;
  }

  rep.pass = rep.max_member_defect < pass_tol &&
             (counterexamples.empty() || rep.min_counterexample_max > fail_tol);
  return rep;
}

}  // namespace polyharm
