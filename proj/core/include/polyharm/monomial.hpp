#ifndef POLYHARM_MONOMIAL_HPP
#define POLYHARM_MONOMIAL_HPP

#include <array>
#include <string>
#include <vector>

namespace polyharm {

// Monomial x1^e1 x2^e2 x3^e3. The library is fixed to three variables.
struct Monomial {
  std::array<int, 3> e{0, 0, 0};

  int degree() const { return e[0] + e[1] + e[2]; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

// Canonical order: ascending total degree, then within a degree the
// x1-dominant monomial first (descending lexicographic exponent tuple).
// Deterministic everywhere: term storage, printing, matrix columns, pivots.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e > b.e;
  }
};

// All monomials of the exact degree d, canonically ordered.
inline std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<Monomial> out;
  for (int e1 = d; e1 >= 0; --e1)
    for (int e2 = d - e1; e2 >= 0; --e2) out.push_back(Monomial{{e1, e2, d - e1 - e2}});
  return out;
}

inline std::string monomial_str(const Monomial& m) {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (m.e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1) + "^" + std::to_string(m.e[i]);
  }
  return out;
}

}  // namespace polyharm

#endif
