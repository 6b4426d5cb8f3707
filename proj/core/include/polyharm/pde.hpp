#ifndef POLYHARM_PDE_HPP
#define POLYHARM_PDE_HPP

#include <map>
#include <string>
#include <vector>

#include "polyharm/invariant_basis.hpp"
#include "polyharm/polynomial.hpp"

namespace polyharm {

// A constant-coefficient PDE system phi(d) f = 0, one equation per
// generator. Generators are homogeneous of degree >= 1 and rational, so the
// kernel computation is exact.
struct PdeSystem {
  std::string name;
  std::vector<Polynomial<Rational>> generators;
};

PdeSystem a3_system();      // e2, e3, e4
PdeSystem b3_system();      // e2, e4, e6
PdeSystem jumped_system();  // e2, e6, e4^2

// Graded basis of a finite-dimensional space of polynomials. Bases are held
// in canonical reduced row echelon form over the canonical monomial order,
// so equal spaces compare equal componentwise.
struct GradedBasis {
  std::map<int, std::vector<Polynomial<Rational>>> per_degree;
  int total_dim = 0;
  int max_degree_checked = -1;

  int dim(int degree) const {
    auto it = per_degree.find(degree);
    return it == per_degree.end() ? 0 : static_cast<int>(it->second.size());
  }
  int top_nonzero_degree() const {
    int top = -1;
    for (const auto& [d, basis] : per_degree)
      if (!basis.empty()) top = d;
    return top;
  }
  std::vector<Polynomial<Rational>> all() const {
    std::vector<Polynomial<Rational>> out;
    for (const auto& [d, basis] : per_degree) out.insert(out.end(), basis.begin(), basis.end());
    return out;
  }
};

bool equal_bases(const GradedBasis& a, const GradedBasis& b, int up_to_degree);

// Degree-by-degree kernel of the stacked maps f -> phi(d) f on homogeneous
// polynomials, for every degree <= max_degree.
GradedBasis solve(const PdeSystem& system, int max_degree);

// Span of { mu(d) generator : mu monomial }, graded by degree, canonically
// reduced. Degrees above deg(generator) are empty.
GradedBasis module_span(const Polynomial<Rational>& generator, int max_degree);

struct ExactSequenceReport {
  int max_degree = 0;
  int dim_sol = 0;
  int dim_b3 = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Checks the four-term exact sequence linking the jumped space Sol to the
// B3 harmonics: inclusion, the e4(d) surjection, its kernel, and dim = 96.
ExactSequenceReport verify_exact_sequence(int max_degree);

}  // namespace polyharm

#endif
