#include "polyharm/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyharm {

namespace {

// Newton polish starting from the bracket midpoint; the bracket already
// isolates a simple root, so convergence is quadratic.
BigFloat polish(const UniPoly& p, const RootInterval& iv, mpfr_prec_t prec) {
  const UniPoly dp = p.derivative();
  BigFloat x = BigFloat::from_rational(iv.midpoint(), prec);
  for (int it = 0; it < 64; ++it) {
    const BigFloat fx = p.eval(x);
    if (fx.is_zero()) break;
    const BigFloat dfx = dp.eval(x);
    const BigFloat step = fx / dfx;
    x -= step;
    BigFloat rel = step.abs();
    BigFloat floor = x.abs();
    for (int i = 0; i < static_cast<int>(prec) - 8; ++i) floor /= BigFloat(2);
    if (rel <= floor) break;
  }
  return x;
}

}  // namespace

RootReport isolate_positive_roots(const UniPoly& p, const Rational& width, mpfr_prec_t prec) {
  if (p.is_zero()) throw std::invalid_argument("isolate_positive_roots: zero polynomial");
  RootReport rep;
  rep.polynomial = p.str();

  const UniPoly g = UniPoly::gcd(p, p.derivative());
  rep.squarefree = g.degree() <= 0;
  // Work with the squarefree part so sign changes bracket every root.
  UniPoly q = p;
  if (!rep.squarefree) {
    // exact deflation: q = p / gcd via repeated remainder-free division
    // (the polynomials in this library are squarefree; this path is a
    // safety net rather than a hot path)
    std::vector<Rational> num = p.coefficients();
    const int dg = g.degree();
    std::vector<Rational> quot(static_cast<std::size_t>(p.degree() - dg + 1), Rational(0));
    for (int i = p.degree() - dg; i >= 0; --i) {
      const Rational c =
          num[static_cast<std::size_t>(i + dg)] / g[static_cast<std::size_t>(dg)];
      quot[static_cast<std::size_t>(i)] = c;
      for (int j = 0; j <= dg; ++j)
        num[static_cast<std::size_t>(i + j)] -= c * g[static_cast<std::size_t>(j)];
    }
    q = UniPoly(std::move(quot));
  }

  const auto chain = sturm_chain(q);
  const Rational bound = root_bound(q);
  rep.positive_count = sturm_count(chain, Rational(0), bound);

  // Split (0, bound] until each piece holds a single root.
  std::vector<RootInterval> work{{Rational(0), bound}};
  std::vector<RootInterval> isolated;
  while (!work.empty()) {
    RootInterval iv = work.back();
    work.pop_back();
    const int n = sturm_count(chain, iv.lo, iv.hi);
    if (n == 0) continue;
    if (n == 1) {
      isolated.push_back(iv);
      continue;
    }
    const Rational mid = iv.midpoint();
    work.push_back({iv.lo, mid});
    work.push_back({mid, iv.hi});
  }
  std::sort(isolated.begin(), isolated.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });

  // Refine each bracket to the requested width by exact bisection.
  for (RootInterval iv : isolated) {
    if (q.sign_at(iv.hi) == 0) {
      iv.lo = iv.hi;  // exact rational root
    } else {
      while (iv.width() > width) {
        const Rational mid = iv.midpoint();
        const int sm = q.sign_at(mid);
        if (sm == 0) {
          iv.lo = iv.hi = mid;
          break;
        }
        // keep the half with the sign change; p(0) side recomputed per step
        if (q.sign_at(iv.lo) * sm < 0)
          iv.hi = mid;
        else
          iv.lo = mid;
      }
    }
    rep.intervals.push_back(iv);
    rep.refined.push_back(polish(q, iv, prec));
  }
  return rep;
}

const UniPoly& tetra_edge_critical_poly() {
  static const UniPoly p = UniPoly::from_integers({1, 2, 1, -36, -45, -270, -405});
  return p;
}
const UniPoly& octa_vertex_critical_poly() {
  static const UniPoly p = UniPoly::from_integers({8, 0, 0, 0, -81});
  return p;
}
const UniPoly& octa_edge_critical_poly() {
  static const UniPoly p =
      UniPoly::from_integers({16, 32, 40, -48, -396, -432, -810, -972, -729});
  return p;
}
const UniPoly& octa_face_critical_poly() {
  static const UniPoly p = UniPoly::from_integers({4, 8, 6, -18, -81});
  return p;
}

}  // namespace polyharm
