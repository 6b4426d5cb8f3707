#include "polyharm/pde.hpp"

#include <algorithm>

#include "polyharm/diff_ops.hpp"
#include "polyharm/linalg.hpp"

namespace polyharm {

namespace {

std::vector<Rational> poly_to_vector(const Polynomial<Rational>& p,
                                     const std::vector<Monomial>& basis) {
  std::vector<Rational> v(basis.size(), Rational(0));
  for (std::size_t i = 0; i < basis.size(); ++i) v[i] = p.coeff(basis[i]);
  return v;
}

Polynomial<Rational> vector_to_poly(const std::vector<Rational>& v,
                                    const std::vector<Monomial>& basis) {
  Polynomial<Rational> p;
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], v[i]);
  return p;
}

std::vector<Polynomial<Rational>> canonical_polys(
    const std::vector<Polynomial<Rational>>& polys, int degree) {
  if (polys.empty()) return {};
  const auto mons = monomials_of_degree(degree);
  std::vector<std::vector<Rational>> rows;
  rows.reserve(polys.size());
  for (const auto& p : polys) rows.push_back(poly_to_vector(p, mons));
  const auto canon = canonical_row_space(rows, static_cast<int>(mons.size()), Rational(0));
  std::vector<Polynomial<Rational>> out;
  out.reserve(canon.size());
  for (const auto& row : canon) out.push_back(vector_to_poly(row, mons));
  return out;
}

}  // namespace

PdeSystem a3_system() { return {"a3", {inv_e2(), inv_e3(), inv_e4()}}; }
PdeSystem b3_system() { return {"b3", {inv_e2(), inv_e4(), inv_e6()}}; }
PdeSystem jumped_system() { return {"jumped", {inv_e2(), inv_e6(), inv_e4() * inv_e4()}}; }

GradedBasis solve(const PdeSystem& system, int max_degree) {
  GradedBasis out;
  out.max_degree_checked = max_degree;
  for (int d = 0; d <= max_degree; ++d) {
    const auto mons = monomials_of_degree(d);
    // Stack one block per generator of degree <= d.
    int rows = 0;
    std::vector<std::pair<const Polynomial<Rational>*, std::vector<Monomial>>> blocks;
    for (const auto& g : system.generators) {
      const int gd = g.degree();
      if (gd > d) continue;
      blocks.emplace_back(&g, monomials_of_degree(d - gd));
      rows += static_cast<int>(blocks.back().second.size());
    }
    DenseMatrix<Rational> m(rows, static_cast<int>(mons.size()));
    int row0 = 0;
    for (const auto& [g, targets] : blocks) {
      std::map<Monomial, int, MonomialOrder> index;
      for (std::size_t i = 0; i < targets.size(); ++i) index[targets[i]] = static_cast<int>(i);
      for (std::size_t j = 0; j < mons.size(); ++j) {
        const auto image = apply_operator(*g, Polynomial<Rational>::term(mons[j], Rational(1)));
        for (const auto& [mon, c] : image.terms())
          m.at(row0 + index.at(mon), static_cast<int>(j)) = c;
      }
      row0 += static_cast<int>(targets.size());
    }
    auto kernel = kernel_basis(std::move(m), Rational(0));
    std::vector<Polynomial<Rational>> polys;
    polys.reserve(kernel.size());
    for (const auto& v : kernel) polys.push_back(vector_to_poly(v, mons));
    auto canon = canonical_polys(polys, d);
    out.total_dim += static_cast<int>(canon.size());
    out.per_degree[d] = std::move(canon);
  }
  return out;
}

GradedBasis module_span(const Polynomial<Rational>& generator, int max_degree) {
  GradedBasis out;
  out.max_degree_checked = max_degree;
  const int gdeg = std::max(generator.degree(), 0);
  std::map<int, std::vector<Polynomial<Rational>>> buckets;
  for (int dd = 0; dd <= gdeg; ++dd) {
    const int target = gdeg - dd;
    if (target > max_degree) continue;
    for (const auto& mu : monomials_of_degree(dd)) {
      auto p = apply_operator(Polynomial<Rational>::term(mu, Rational(1)), generator);
      if (!p.is_zero()) buckets[target].push_back(std::move(p));
    }
  }
  for (int d = 0; d <= max_degree; ++d) {
    auto it = buckets.find(d);
    std::vector<Polynomial<Rational>> canon =
        it == buckets.end() ? std::vector<Polynomial<Rational>>{}
                            : canonical_polys(it->second, d);
    out.total_dim += static_cast<int>(canon.size());
    out.per_degree[d] = std::move(canon);
  }
  return out;
}

bool equal_bases(const GradedBasis& a, const GradedBasis& b, int up_to_degree) {
  for (int d = 0; d <= up_to_degree; ++d) {
    const auto ia = a.per_degree.find(d);
    const auto ib = b.per_degree.find(d);
    const std::vector<Polynomial<Rational>> ea, eb;
    const auto& va = ia == a.per_degree.end() ? ea : ia->second;
    const auto& vb = ib == b.per_degree.end() ? eb : ib->second;
    if (va != vb) return false;
  }
  return true;
}

ExactSequenceReport verify_exact_sequence(int max_degree) {
  ExactSequenceReport rep;
  rep.max_degree = max_degree;
  const GradedBasis sol = solve(jumped_system(), max_degree);
  const GradedBasis h = solve(b3_system(), max_degree);
  rep.dim_sol = sol.total_dim;
  rep.dim_b3 = h.total_dim;

  if (sol.total_dim != 96)
    rep.failures.push_back("dim Sol = " + std::to_string(sol.total_dim) + ", expected 96");
  if (h.total_dim != 48)
    rep.failures.push_back("dim H(B3) = " + std::to_string(h.total_dim) + ", expected 48");

  for (int d = 0; d <= max_degree; ++d) {
    const auto mons = monomials_of_degree(d);
    const auto cols = static_cast<int>(mons.size());

    // (i) inclusion H(B3) subset Sol, element by element
    std::vector<std::vector<Rational>> sol_rows;
    for (const auto& p : sol.per_degree.at(d)) sol_rows.push_back(poly_to_vector(p, mons));
    for (const auto& p : h.per_degree.at(d)) {
      if (!in_row_space(poly_to_vector(p, mons), sol_rows))
        rep.failures.push_back("degree " + std::to_string(d) +
                               ": B3 harmonic not contained in Sol");
    }

    // (ii) e4(d) maps Sol_d onto H_{d-4}; (iii) its kernel has dim H_d
    const int td = d - 4;
    std::vector<Polynomial<Rational>> images;
    for (const auto& p : sol.per_degree.at(d)) {
      auto q = apply_operator(inv_e4(), p);
      if (!q.is_zero()) images.push_back(std::move(q));
    }
    int image_dim = 0;
    if (td >= 0) {
      auto canon = canonical_polys(images, td);
      image_dim = static_cast<int>(canon.size());
      if (canon != h.per_degree.at(td))
        rep.failures.push_back("degree " + std::to_string(d) +
                               ": e4 image differs from the B3 space");
    } else if (!images.empty()) {
      rep.failures.push_back("degree " + std::to_string(d) + ": e4 image below degree 0");
    }
    const int kernel_dim = sol.dim(d) - image_dim;
    if (kernel_dim != h.dim(d))
      rep.failures.push_back("degree " + std::to_string(d) + ": kernel dim " +
                             std::to_string(kernel_dim) + " != " + std::to_string(h.dim(d)));
    // e4(d) annihilates every B3 harmonic, so the kernel contains H_d;
    // equality then follows from the dimension count.
    for (const auto& p : h.per_degree.at(d))
      if (!apply_operator(inv_e4(), p).is_zero())
        rep.failures.push_back("degree " + std::to_string(d) + ": e4 does not kill B3 basis");
  }
  return rep;
}

}  // namespace polyharm
