#ifndef POLYHARM_GROUP_HPP
#define POLYHARM_GROUP_HPP

#include <array>
#include <vector>

#include "polyharm/linear_form.hpp"
#include "polyharm/polynomial.hpp"

namespace polyharm {

enum class Group { A3, B3 };

// Signed permutation g: x_i -> signs[i] * x_{perm[i]}.
struct SignedPerm {
  std::array<int, 3> perm{0, 1, 2};
  std::array<int, 3> signs{1, 1, 1};
};

// W(B3): all 48 signed permutations (symmetries of the cube/octahedron).
// W(A3): the 24 with an even number of sign flips; with the tetrahedron
// vertices on the cube diagonal points x1 x2 x3 = 1, these are exactly the
// symmetries of the tetrahedron.
const std::vector<SignedPerm>& group_elements(Group g);

// (g.f)(x) = f(g(x)).
template <class S>
Polynomial<S> act(const SignedPerm& g, const Polynomial<S>& f) {
  Polynomial<S> out;
  for (const auto& [m, c] : f.terms()) {
    Monomial n;
    int sign = 1;
    for (int i = 0; i < 3; ++i) {
      n.e[g.perm[i]] += m.e[i];
      if (g.signs[i] < 0 && (m.e[i] & 1)) sign = -sign;
    }
    out.add_term(n, sign < 0 ? -c : c);
  }
  return out;
}

template <class S>
Vec3<S> act(const SignedPerm& g, const Vec3<S>& v) {
  // Image of the point v under the linear map x -> (signs[i] x_{perm[i]})_i.
  Vec3<S> out{v[0], v[1], v[2]};
  for (int i = 0; i < 3; ++i) {
    out[i] = v[g.perm[i]];
    if (g.signs[i] < 0) out[i] = -out[i];
  }
  return out;
}

// Exact invariance for rational input.
bool is_invariant(const Polynomial<Rational>& f, Group g);

}  // namespace polyharm

#endif
